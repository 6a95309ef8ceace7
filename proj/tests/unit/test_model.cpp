// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The noma-lab Authors

#include "fixtures.hpp"
#include "noma/model.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <stdexcept>

namespace {

using namespace noma;

ChannelRealization uniform_channel(double beta) { return {beta, beta, beta, beta, beta}; }

TEST(SystemParams, DerivedFractions)
{
    const SystemParams p(0.9, 0.6, 10.0, {});
    EXPECT_EQ(p.a1() + p.a2(), 1.0);
    EXPECT_EQ(p.b1() + p.b2(), 1.0);
    EXPECT_NEAR(p.x1_ceiling(), 9.0, 1e-12);
    EXPECT_NEAR(p.x2_relay_ceiling(), 1.5, 1e-12);
}

TEST(SystemParams, RejectsInvalidValues)
{
    EXPECT_THROW(SystemParams(0.5, 0.6, 10.0, {}), std::invalid_argument);
    EXPECT_THROW(SystemParams(1.0, 0.6, 10.0, {}), std::invalid_argument);
    EXPECT_THROW(SystemParams(0.9, 0.0, 10.0, {}), std::invalid_argument);
    EXPECT_THROW(SystemParams(0.9, 1.0, 10.0, {}), std::invalid_argument);
    EXPECT_THROW(SystemParams(0.9, 0.6, 0.0, {}), std::invalid_argument);
    EXPECT_THROW(SystemParams(0.9, 0.6, INFINITY, {}), std::invalid_argument);
    EXPECT_THROW(SystemParams(0.9, 0.6, 10.0, {1, 1, 0, 1, 1}), std::invalid_argument);
    EXPECT_THROW(SystemParams(0.9, 0.6, 10.0, {1, 1, 1, NAN, 1}), std::invalid_argument);
    EXPECT_NO_THROW(SystemParams(0.6, 0.9, 10.0, {}));
}

TEST(SchemeNames, RoundTrip)
{
    EXPECT_EQ(parse_scheme(to_string(Scheme::SingleSignal)), Scheme::SingleSignal);
    EXPECT_EQ(parse_scheme(to_string(Scheme::Mrc)), Scheme::Mrc);
    EXPECT_FALSE(parse_scheme("dual").has_value());
}

TEST(SnrRelay, DirectSubstitution)
{
    const SystemParams p(0.9, 0.6, 10.0, {});
    const auto g = snr_relay(p, uniform_channel(1.0));
    EXPECT_NEAR(g.gamma_x1, 4.5, 1e-12);
    EXPECT_NEAR(g.gamma_x2, 1.0, 1e-12);

    const auto zero = snr_relay(p, uniform_channel(0.0));
    EXPECT_EQ(zero.gamma_x1, 0.0);
    EXPECT_EQ(zero.gamma_x2, 0.0);

    EXPECT_NEAR(snr_relay(p, uniform_channel(1e12)).gamma_x1, 9.0, 1e-6);
}

TEST(SnrBreakdown, DirectSubstitution)
{
    const SystemParams p(0.9, 0.6, 10.0, {});
    for (Scheme s : {Scheme::SingleSignal, Scheme::Mrc}) {
        const auto z = snr_breakdown(s, p, uniform_channel(0.0));
        EXPECT_EQ(z.s1, 0.0);
        EXPECT_EQ(z.s2, 0.0);
        EXPECT_EQ(z.s3, 0.0);
        const auto b = snr_breakdown(s, p, uniform_channel(1.0));
        EXPECT_NEAR(b.s1, 4.5, 1e-12);
        EXPECT_NEAR(b.s2, 1.0, 1e-12);
        EXPECT_NEAR(b.s3, 4.0, 1e-12);
    }
    // Make the relay links the bottleneck so the MRC direct-link term shows.
    const ChannelRealization ch{10.0, 1.0, 1.0, 0.05, 0.05};
    const auto single = snr_breakdown(Scheme::SingleSignal, p, ch);
    const auto mrc = snr_breakdown(Scheme::Mrc, p, ch);
    const double relay = 0.6 * 0.05 * 10.0 / (0.4 * 0.05 * 10.0 + 1.0);
    EXPECT_NEAR(single.s2, relay, 1e-12);
    EXPECT_NEAR(mrc.s2, relay + 0.1 * 1.0 * 10.0, 1e-12);
}

TEST(SumRate, Arithmetic)
{
    const SystemParams p(0.9, 0.6, 10.0, {});
    EXPECT_EQ(sum_rate(Scheme::Mrc, p, uniform_channel(0.0)), 0.0);
    // The realization with all beta = 1 gives SnrBreakdown (4.5, 1, 4).
    EXPECT_NEAR(half_rate(1.0) + half_rate(1.0) + half_rate(4.0), 2.1609640474, 1e-9);
    EXPECT_NEAR(sum_rate(Scheme::SingleSignal, p, uniform_channel(1.0)),
                half_rate(4.5) + half_rate(1.0) + half_rate(4.0), 1e-12);
}

class RandomRealizations : public ::testing::Test {
protected:
    ChannelRealization draw()
    {
        const auto a = fixtures::fig2_alpha();
        return {e_(rng_) * a.su1, e_(rng_) * a.su2, e_(rng_) * a.su3, e_(rng_) * a.ru2, e_(rng_) * a.ru3};
    }
    std::mt19937_64 rng_{12345};
    std::exponential_distribution<double> e_{1.0};
};

TEST_F(RandomRealizations, MrcDominatesSingle)
{
    const auto p = fixtures::fig2_params(20.0);
    for (int i = 0; i < 100000; ++i) {
        const auto ch = draw();
        const auto s = snr_breakdown(Scheme::SingleSignal, p, ch);
        const auto m = snr_breakdown(Scheme::Mrc, p, ch);
        ASSERT_EQ(s.s1, m.s1);
        ASSERT_EQ(s.s3, m.s3);
        ASSERT_GE(m.s2, s.s2);
        ASSERT_GE(sum_rate(Scheme::Mrc, p, ch), sum_rate(Scheme::SingleSignal, p, ch));
    }
}

TEST_F(RandomRealizations, CeilingAndMonotonicity)
{
    for (int i = 0; i < 20000; ++i) {
        const auto ch = draw();
        for (Scheme scheme : {Scheme::SingleSignal, Scheme::Mrc}) {
            SnrBreakdown prev{};
            for (double db = -10.0; db <= 50.0; db += 5.0) {
                const auto p = fixtures::fig2_params(db);
                const auto s = snr_breakdown(scheme, p, ch);
                ASSERT_LT(s.s1, p.x1_ceiling());
                ASSERT_GE(s.s1, prev.s1);
                ASSERT_GE(s.s2, prev.s2);
                ASSERT_GE(s.s3, prev.s3);
                prev = s;
            }
            const auto p = fixtures::fig2_params(20.0);
            const auto base = snr_breakdown(scheme, p, ch);
            const ChannelRealization scaled{2 * ch.beta_su1, 2 * ch.beta_su2, 2 * ch.beta_su3,
                                            2 * ch.beta_ru2, 2 * ch.beta_ru3};
            const auto up = snr_breakdown(scheme, p, scaled);
            ASSERT_GE(up.s1, base.s1);
            ASSERT_GE(up.s2, base.s2);
            ASSERT_GE(up.s3, base.s3);
        }
    }
}

TEST(DbToLinear, Values)
{
    EXPECT_NEAR(db_to_linear(0.0), 1.0, 1e-15);
    EXPECT_NEAR(db_to_linear(30.0), 1000.0, 1e-10);
    EXPECT_NEAR(db_to_linear(-10.0), 0.1, 1e-15);
}

}  // namespace
