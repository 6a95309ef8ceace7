// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The noma-lab Authors

#include "fixtures.hpp"
#include "noma/channel.hpp"
#include "noma/kernels.hpp"

#include <gtest/gtest.h>

#include <bit>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace {

using namespace noma;
using kernels::Isa;

std::int64_t ulp_distance(double a, double b)
{
    const auto ia = std::bit_cast<std::int64_t>(a);
    const auto ib = std::bit_cast<std::int64_t>(b);
    return ia > ib ? ia - ib : ib - ia;
}

TEST(DetLog, WithinOneUlpOfLibm)
{
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> exponent(-1020.0, 1020.0);
    for (int i = 0; i < 200000; ++i) {
        const double x = std::exp2(exponent(rng));
        ASSERT_LE(ulp_distance(kernels::det_log(x), std::log(x)), 1) << "x = " << x;
    }
    EXPECT_EQ(kernels::det_log(1.0), 0.0);
    EXPECT_LE(ulp_distance(kernels::det_log(0x1.0p-53), std::log(0x1.0p-53)), 1);
}

TEST(Dispatch, ActiveIsSupported)
{
    EXPECT_TRUE(kernels::supported(Isa::Scalar));
    EXPECT_TRUE(kernels::supported(kernels::active()));
    EXPECT_EQ(kernels::to_string(Isa::Avx2), "avx2");
}

TEST(Dispatch, SizeMismatchThrows)
{
    std::vector<double> a(4), b(5);
    EXPECT_THROW(kernels::half_rates(a, b), std::invalid_argument);
}

class KernelEquivalence : public ::testing::TestWithParam<std::size_t> {
protected:
    void SetUp() override
    {
        if (!kernels::supported(Isa::Avx2))
            GTEST_SKIP() << "AVX2 not available";
    }
};

TEST_P(KernelEquivalence, SnrBitIdentical)
{
    const std::size_t n = GetParam();
    std::array<std::vector<double>, 5> u;
    for (int f = 0; f < 5; ++f) {
        u[f].resize(n);
        channel::fill_uniforms({1, static_cast<std::uint64_t>(f)}, 0, u[f]);
    }
    // Edge uniforms: exactly 1 (zero gain) and the smallest value 2^-53.
    if (n > 2) {
        u[0][0] = 1.0;
        u[3][1] = 0x1.0p-53;
        u[4][2] = 1.0;
    }
    kernels::UniformBlock block;
    for (int f = 0; f < 5; ++f)
        block.field[f] = u[f];

    for (Scheme scheme : {Scheme::SingleSignal, Scheme::Mrc}) {
        for (double db : {-20.0, 0.0, 17.5, 40.0, 90.0}) {
            const auto p = fixtures::fig2_params(db);
            std::vector<double> a1(n), a2(n), a3(n), v1(n), v2(n), v3(n);
            kernels::snr_from_uniforms(scheme, p, block, {a1, a2, a3}, Isa::Scalar);
            kernels::snr_from_uniforms(scheme, p, block, {v1, v2, v3}, Isa::Avx2);
            for (std::size_t i = 0; i < n; ++i) {
                ASSERT_EQ(std::bit_cast<std::uint64_t>(a1[i]), std::bit_cast<std::uint64_t>(v1[i]));
                ASSERT_EQ(std::bit_cast<std::uint64_t>(a2[i]), std::bit_cast<std::uint64_t>(v2[i]));
                ASSERT_EQ(std::bit_cast<std::uint64_t>(a3[i]), std::bit_cast<std::uint64_t>(v3[i]));
            }
        }
    }
}

TEST_P(KernelEquivalence, HalfRatesBitIdentical)
{
    const std::size_t n = GetParam();
    std::mt19937_64 rng(n);
    std::uniform_real_distribution<double> exponent(-60.0, 60.0);
    std::vector<double> snr(n), a(n), b(n);
    for (auto& s : snr)
        s = std::exp2(exponent(rng));
    if (n > 1)
        snr[0] = 0.0;
    kernels::half_rates(snr, a, Isa::Scalar);
    kernels::half_rates(snr, b, Isa::Avx2);
    for (std::size_t i = 0; i < n; ++i)
        ASSERT_EQ(std::bit_cast<std::uint64_t>(a[i]), std::bit_cast<std::uint64_t>(b[i]));
}

INSTANTIATE_TEST_SUITE_P(Lengths, KernelEquivalence, ::testing::Values(0, 1, 3, 4, 7, 64, 4097));

TEST(ScalarKernel, MatchesModel)
{
    const auto p = fixtures::fig2_params(25.0);
    const std::size_t n = 256;
    std::array<std::vector<double>, 5> u;
    std::array<std::span<double>, 5> spans;
    for (int f = 0; f < 5; ++f) {
        u[f].resize(n);
        spans[f] = u[f];
    }
    channel::fill_realization_uniforms({8, 2}, 0, spans);
    kernels::UniformBlock block;
    for (int f = 0; f < 5; ++f)
        block.field[f] = u[f];
    for (Scheme scheme : {Scheme::SingleSignal, Scheme::Mrc}) {
        std::vector<double> s1(n), s2(n), s3(n), r(n);
        kernels::snr_from_uniforms(scheme, p, block, {s1, s2, s3}, Isa::Scalar);
        kernels::half_rates(s1, r, Isa::Scalar);
        for (std::size_t i = 0; i < n; ++i) {
            const auto ch = channel::sample_realization(p, {8, 2}, i);
            const auto ref = snr_breakdown(scheme, p, ch);
            ASSERT_EQ(s1[i], ref.s1);
            ASSERT_EQ(s2[i], ref.s2);
            ASSERT_EQ(s3[i], ref.s3);
            ASSERT_NEAR(r[i], half_rate(ref.s1), 1e-15);
        }
    }
}

}  // namespace
