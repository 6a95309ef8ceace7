// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The noma-lab Authors

#pragma once

// fdlibm e_log.c reduction and minimax polynomial, shared by the scalar and
// AVX2 kernels. Inputs are restricted to positive normal numbers.

#include <bit>
#include <cstdint>

namespace noma::kernels::detail {

inline constexpr double kLn2Hi = 6.93147180369123816490e-01;
inline constexpr double kLn2Lo = 1.90821492927058770002e-10;
inline constexpr double kLg1 = 6.666666666666735130e-01;
inline constexpr double kLg2 = 3.999999999940941908e-01;
inline constexpr double kLg3 = 2.857142874366239149e-01;
inline constexpr double kLg4 = 2.222219843214978396e-01;
inline constexpr double kLg5 = 1.818357216161805012e-01;
inline constexpr double kLg6 = 1.531383769920937332e-01;
inline constexpr double kLg7 = 1.479819860511658591e-01;
inline constexpr double kHalfInvLn2 = 0.72134752044448170368;  // 0.5 / ln 2

inline double log_positive(double x) noexcept
{
    const auto bits = std::bit_cast<std::uint64_t>(x);
    std::int64_t hx = static_cast<std::int64_t>(bits >> 32);
    std::int64_t k = (hx >> 20) - 1023;
    hx &= 0x000fffff;
    const std::int64_t i = (hx + 0x95f64) & 0x100000;
    const std::uint64_t high = static_cast<std::uint64_t>(hx | (i ^ 0x3ff00000));
    const double m = std::bit_cast<double>((high << 32) | (bits & 0xffffffffULL));
    k += i >> 20;

    const double f = m - 1.0;
    const double s = f / (2.0 + f);
    const double dk = static_cast<double>(k);
    const double z = s * s;
    const double w = z * z;
    const double t1 = w * (kLg2 + w * (kLg4 + w * kLg6));
    const double t2 = z * (kLg1 + w * (kLg3 + w * (kLg5 + w * kLg7)));
    const double r = t2 + t1;
    const std::int64_t sel = (hx - 0x6147a) | (0x6b851 - hx);
    if (sel > 0) {
        const double hfsq = 0.5 * f * f;
        return dk * kLn2Hi - ((hfsq - (s * (hfsq + r) + dk * kLn2Lo)) - f);
    }
    return dk * kLn2Hi - ((s * (f - r) - dk * kLn2Lo) - f);
}

}  // namespace noma::kernels::detail
