// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The noma-lab Authors

#include "noma/specialfn.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace noma::specialfn {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kSwitch = 1.0;
constexpr int kMaxIter = 10000;

}  // namespace

namespace detail {

EiResult ei_series(double x)
{
    // Ei(x) = gamma + ln|x| + sum_{k>=1} x^k / (k * k!)
    double term = 1.0;
    double sum = 0.0;
    double last = 0.0;
    for (int k = 1; k < kMaxIter; ++k) {
        term *= x / k;
        last = term / k;
        sum += last;
        if (std::abs(last) <= kEps * std::abs(sum))
            break;
    }
    const double log_part = std::log(std::abs(x));
    const double value = euler_gamma() + log_part + sum;
    const double err = std::abs(last)
        + 4.0 * kEps * (euler_gamma() + std::abs(log_part) + std::abs(sum));
    return {value, err};
}

EiResult e1_continued_fraction(double z)
{
    // Modified Lentz evaluation of
    // E1(z) = e^-z / (z + 1 - 1^2 / (z + 3 - 2^2 / (z + 5 - ...)))
    constexpr double tiny = 1e-300;
    double b = z + 1.0;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    double delta = 0.0;
    for (int i = 1; i < kMaxIter; ++i) {
        const double an = -static_cast<double>(i) * i;
        b += 2.0;
        d = 1.0 / (an * d + b);
        c = b + an / c;
        delta = c * d;
        h *= delta;
        if (std::abs(delta - 1.0) <= kEps)
            break;
    }
    return {h, (std::abs(delta - 1.0) + 8.0 * kEps) * h};
}

}  // namespace detail

EiResult ei(double x)
{
    if (!std::isfinite(x) || x >= 0.0)
        throw std::domain_error("ei: argument must be finite and negative");
    if (-x <= kSwitch)
        return detail::ei_series(x);
    const auto scaled = detail::e1_continued_fraction(-x);
    const double decay = std::exp(x);
    return {-scaled.value * decay, scaled.est_abs_error * decay};
}

double exp_e1(double z)
{
    if (!std::isfinite(z) || z <= 0.0)
        throw std::domain_error("exp_e1: argument must be finite and positive");
    if (z <= kSwitch)
        return -std::exp(z) * detail::ei_series(-z).value;
    return detail::e1_continued_fraction(z).value;
}

}  // namespace noma::specialfn
