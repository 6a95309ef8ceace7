// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The noma-lab Authors

#pragma once

namespace noma::specialfn {

struct EiResult {
    double value;
    double est_abs_error;
};

/// Exponential integral Ei(x) = -E1(-x) for x < 0.
///
/// Power series for |x| <= 1, Lentz continued fraction for E1 beyond.
/// Throws std::domain_error for x >= 0 or non-finite x.
EiResult ei(double x);

/// e^z * E1(z) for z > 0, i.e. -e^z * Ei(-z), without the overflow of the
/// naive product at large z.
double exp_e1(double z);

/// Euler-Mascheroni constant.
constexpr double euler_gamma() noexcept { return 0.57721566490153286061; }

namespace detail {
// Exposed for the method-agreement tests.
EiResult ei_series(double x);
EiResult e1_continued_fraction(double z);  // returns E1(z) scaled by e^z
}  // namespace detail

}  // namespace noma::specialfn
