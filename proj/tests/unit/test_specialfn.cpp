// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The noma-lab Authors

#include "noma/specialfn.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <gtest/gtest.h>

#include <cmath>
#include <stdexcept>

namespace {

using noma::specialfn::ei;
using noma::specialfn::euler_gamma;
using noma::specialfn::exp_e1;
using Big = boost::multiprecision::cpp_bin_float_50;

// Defining series in 50 significant digits.
double ei_oracle(double x)
{
    const Big bx = x;
    Big term = 1;
    Big sum = 0;
    for (int k = 1; k < 2000; ++k) {
        term *= bx / k;
        const Big add = term / k;
        sum += add;
        if (abs(add) < Big("1e-45") * (abs(sum) + 1) && k > -x)
            break;
    }
    const Big v = boost::math::constants::euler<Big>() + log(abs(bx)) + sum;
    return static_cast<double>(v);
}

// e^z E1(z) ~ (1/z) sum_k (-1)^k k! / z^k, truncated at eight terms.
double asymptotic_exp_e1(double z)
{
    double term = 1.0, sum = 0.0;
    for (int k = 0; k < 8; ++k) {
        sum += term;
        term *= -(k + 1) / z;
    }
    return sum / z;
}

TEST(Ei, KnownValueAtMinusOne)
{
    EXPECT_NEAR(ei(-1.0).value, -0.219383934395520, 1e-15);
    EXPECT_NEAR(ei(-1.0).value, ei_oracle(-1.0), 1e-15);
}

TEST(Ei, SmallArgumentMatchesLeadingTerms)
{
    const double x = 1e-8;
    EXPECT_NEAR(ei(-x).value, euler_gamma() + std::log(x) - x, 1e-15);
    EXPECT_NEAR(ei(-x).value, -17.843465089, 1e-9);
}

TEST(Ei, DecaysForLargeNegativeArgument)
{
    const double v = ei(-100.0).value;
    EXPECT_LT(v, 0.0);
    EXPECT_LT(std::abs(v), 1e-45);
}

TEST(Ei, DomainErrors)
{
    EXPECT_THROW(ei(0.0), std::domain_error);
    EXPECT_THROW(ei(1.0), std::domain_error);
    EXPECT_THROW(ei(std::nan("")), std::domain_error);
    EXPECT_THROW(ei(-INFINITY), std::domain_error);
    EXPECT_THROW(exp_e1(0.0), std::domain_error);
}

TEST(Ei, RelativeAccuracyOnLogGrid)
{
    for (int i = 0; i < 200; ++i) {
        const double x = -std::pow(10.0, -6.0 + i * (std::log10(30.0) + 6.0) / 199.0);
        const double ref = ei_oracle(x);
        EXPECT_NEAR(ei(x).value, ref, 1e-12 * std::abs(ref)) << "x = " << x;
    }
}

TEST(Ei, ErrorEstimateIsSmall)
{
    for (double x : {-700.0, -300.0, -45.0, -1.0000001, -1.0, -0.3, -1e-5, -1e-100, -1e-300}) {
        const auto r = ei(x);
        EXPECT_LT(r.value, 0.0);
        EXPECT_LE(r.est_abs_error, 1e-12 * std::max(1.0, std::abs(r.value))) << "x = " << x;
    }
}

TEST(Ei, MethodsAgreeAroundSwitch)
{
    for (double z = 0.5; z <= 1.5; z += 0.05) {
        const double series = noma::specialfn::detail::ei_series(-z).value;
        const double cf = -noma::specialfn::detail::e1_continued_fraction(z).value * std::exp(-z);
        EXPECT_NEAR(series, cf, 1e-11 * std::abs(series)) << "z = " << z;
    }
}

TEST(Ei, ContinuedFractionMatchesOracleForLargeArguments)
{
    for (double x = -45.0; x <= -35.0; x += 0.5)
        EXPECT_NEAR(ei(x).value, ei_oracle(x), 1e-11 * std::abs(ei_oracle(x))) << "x = " << x;
}

TEST(Ei, DerivativeIsExpOverX)
{
    for (double x : {-0.5, -2.0, -10.0}) {
        const double h = 1e-6 * std::abs(x);
        const double fd = (ei(x + h).value - ei(x - h).value) / (2.0 * h);
        EXPECT_NEAR(fd, std::exp(x) / x, 1e-6 * std::abs(std::exp(x) / x));
    }
}

TEST(Ei, StrictlyDecreasingOnNegativeAxis)
{
    double prev = ei(-50.0).value;
    for (int i = 1; i <= 400; ++i) {
        const double x = -50.0 * std::pow(10.0, -8.0 * i / 400.0);
        const double v = ei(x).value;
        EXPECT_LT(v, prev) << "x = " << x;
        prev = v;
    }
}

TEST(Ei, ScaledE1MatchesDefinition)
{
    for (double z : {1e-9, 0.01, 0.7, 1.0, 3.0, 25.0, 800.0, 1e6}) {
        const double ref = z < 700 ? -std::exp(z) * ei_oracle(-z) : asymptotic_exp_e1(z);
        EXPECT_NEAR(exp_e1(z), ref, 1e-12 * ref) << "z = " << z;
    }
}

TEST(EulerGamma, Value)
{
    EXPECT_EQ(euler_gamma(), 0.5772156649015329);
    EXPECT_NEAR(std::exp(euler_gamma()), 1.7810724179901979, 1e-15);
    // Euler-Maclaurin: H_n - ln n = gamma + 1/(2n) - 1/(12n^2) + ...
    const double n = 1e8;
    long double h = 0.0L;
    for (long i = static_cast<long>(n); i >= 1; --i)
        h += 1.0L / static_cast<long double>(i);
    const double limit = static_cast<double>(h - std::log(static_cast<long double>(n))) - 1.0 / (2 * n) +
                         1.0 / (12 * n * n);
    EXPECT_NEAR(limit, euler_gamma(), 1e-12);
}

TEST(EulerGamma, SmallArgumentLimit)
{
    const double x = 1e-12;
    EXPECT_NEAR(ei(-x).value - std::log(x), euler_gamma(), 1e-10);
}

}  // namespace
