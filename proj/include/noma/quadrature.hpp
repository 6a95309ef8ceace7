// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The noma-lab Authors

#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>

namespace noma::quadrature {

class QuadratureError : public std::runtime_error {
public:
    explicit QuadratureError(const std::string& what) : std::runtime_error(what) {}
};

struct Options {
    double abs_tol = 1e-9;
    std::uint64_t max_evaluations = 1'000'000;
};

struct Result {
    double value = 0.0;
    double abs_error = 0.0;
    std::uint64_t evaluations = 0;
};

/// Globally adaptive 15-point Gauss-Kronrod on the finite interval [a, b].
/// The interval with the largest error estimate is bisected until the summed
/// estimate is below abs_tol. Throws QuadratureError when the evaluation
/// budget runs out first or the integrand returns a non-finite value.
Result integrate(const std::function<double(double)>& f, double a, double b,
                 const Options& options = {});

}  // namespace noma::quadrature
