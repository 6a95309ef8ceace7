// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The noma-lab Authors

#pragma once

#include "noma/model.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>

/// Batch arithmetic behind the Monte Carlo estimators.
///
/// Every kernel has a portable scalar reference and (on x86-64) an AVX2
/// variant. The variants perform the same IEEE operations in the same order
/// (no FMA contraction), so their outputs are bit-identical; the selected ISA
/// never changes a simulation result.
namespace noma::kernels {

enum class Isa { Scalar, Avx2 };

std::string_view to_string(Isa isa) noexcept;

/// Whether the running CPU and this build support `isa`.
bool supported(Isa isa) noexcept;

/// Widest supported ISA, unless overridden by NOMA_LAB_KERNEL=scalar|avx2.
Isa active() noexcept;

/// Natural log for finite, positive, normal x; < 1 ulp from the true value.
/// Deterministic across platforms (does not call libm).
double det_log(double x) noexcept;

/// Uniforms for a block of realizations in structure-of-arrays form, field
/// order su1, su2, su3, ru2, ru3.
struct UniformBlock {
    std::array<std::span<const double>, 5> field;
    std::size_t size() const noexcept { return field[0].size(); }
};

struct SnrBlock {
    std::span<double> s1;
    std::span<double> s2;
    std::span<double> s3;
};

/// beta = -alpha * ln(u) for each link, then the SIC/MRC SNR algebra of
/// snr_breakdown(). All spans must have equal length.
void snr_from_uniforms(Scheme scheme, const SystemParams& params,
                       const UniformBlock& uniforms, SnrBlock out,
                       std::optional<Isa> isa = std::nullopt);

/// out[i] = 0.5 * log2(1 + snr[i]).
void half_rates(std::span<const double> snr, std::span<double> out,
                std::optional<Isa> isa = std::nullopt);

/// Exponential variate with the given mean from a uniform in (0, 1].
inline double exponential_from_uniform(double mean, double u) noexcept
{
    return mean * (0.0 - det_log(u));
}

namespace scalar {
void snr_from_uniforms(Scheme, const SystemParams&, const UniformBlock&, SnrBlock);
void half_rates(std::span<const double>, std::span<double>);
}  // namespace scalar

namespace avx2 {
void snr_from_uniforms(Scheme, const SystemParams&, const UniformBlock&, SnrBlock);
void half_rates(std::span<const double>, std::span<double>);
}  // namespace avx2

}  // namespace noma::kernels
