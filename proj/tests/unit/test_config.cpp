// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The noma-lab Authors

#include "noma/lab/config.hpp"
#include "noma/lab/presets.hpp"

#include <gtest/gtest.h>

#include <set>
#include <sstream>

namespace noma::lab {
namespace {

constexpr const char* kBase = R"(# base
a1 = 0.9
b1 = 0.6
alpha_su1 = 5
alpha_su2 = 1
alpha_su3 = 1
alpha_ru2 = 2
alpha_ru3 = 10
)";

std::string base_without(const std::string& key)
{
    std::string out;
    std::istringstream in(kBase);
    for (std::string line; std::getline(in, line);)
        if (line.rfind(key + " ", 0) != 0)
            out += line + "\n";
    return out;
}

ConfigError parse_error(const std::string& text)
{
    try {
        expand(parse_config(text));
    } catch (const ConfigError& e) {
        return e;
    }
    ADD_FAILURE() << "no error for:\n" << text;
    return ConfigError(-1, "", "none");
}

TEST(Config, EchoRoundTripsEveryPreset)
{
    for (auto name : preset_names()) {
        const auto c = parse_config(*preset_text(name));
        const auto echoed = echo_config(c);
        EXPECT_EQ(parse_config(echoed), c) << name;
        EXPECT_EQ(echo_config(parse_config(echoed)), echoed) << name;
        EXPECT_EQ(expand(parse_config(echoed)).size(), expand(c).size()) << name;
    }
}

TEST(Config, EchoKeepsAwkwardDoubles)
{
    const auto c = parse_config(std::string(kBase) + "rho_db = [0.1, 1e-7, 33.333333333333336]\n");
    const auto back = parse_config(echo_config(c));
    EXPECT_EQ(back.axis(Field::RhoDb).values(), c.axis(Field::RhoDb).values());
}

TEST(Config, RangeIncludesStopDespiteRounding)
{
    const auto c = parse_config(std::string(kBase) + "rho_db = 0:40:5\n");
    const auto v = c.axis(Field::RhoDb).values();
    ASSERT_EQ(v.size(), 9u);
    EXPECT_DOUBLE_EQ(v.back(), 40.0);
    const auto b = parse_config("b1 = 0.1:0.9:0.1\n").axis(Field::B1).values();
    EXPECT_EQ(b.size(), 9u);
}

TEST(Config, Fig2PresetShape)
{
    const auto points = expand(parse_config(*preset_text("fig2")));
    ASSERT_EQ(points.size(), 2u * 2u * 9u);
    // Scheme outermost, then the a1/b1 group, rho fastest.
    EXPECT_EQ(points[0].scheme, Scheme::SingleSignal);
    EXPECT_EQ(points[0].a1, 0.6);
    EXPECT_EQ(points[0].b1, 0.9);
    EXPECT_EQ(points[0].rho_db, 0.0);
    EXPECT_EQ(points[1].rho_db, 5.0);
    EXPECT_EQ(points[9].a1, 0.9);
    EXPECT_EQ(points[9].b1, 0.6);
    EXPECT_EQ(points[18].scheme, Scheme::Mrc);
    for (const auto& p : points) {
        EXPECT_EQ(p.alpha.su1, 5.0);
        EXPECT_EQ(p.alpha.ru3, 10.0);
    }
}

TEST(Config, Fig6aPresetSweepsA1AtFixedB1)
{
    const auto points = expand(parse_config(*preset_text("fig6a")));
    std::set<double> a1, rho;
    for (const auto& p : points) {
        EXPECT_EQ(p.b1, 0.8);
        EXPECT_GT(p.a1, 0.5);
        EXPECT_LT(p.a1, 1.0);
        a1.insert(p.a1);
        rho.insert(p.rho_db);
    }
    EXPECT_GE(a1.size(), 5u);
    EXPECT_EQ(rho, (std::set<double>{15, 20, 25}));
}

TEST(Config, Fig3ZipsFourChannelFields)
{
    const auto points = expand(parse_config(*preset_text("fig3")));
    ASSERT_EQ(points.size(), 2u * 2u * 9u);
    EXPECT_EQ(points[0].alpha.su2, 1.0);
    EXPECT_EQ(points[0].alpha.ru3, 10.0);
    EXPECT_EQ(points[9].alpha.su2, 2.0);
    EXPECT_EQ(points[9].alpha.ru3, 3.0);
}

TEST(Config, MetricSpecificFields)
{
    auto c = parse_config(*preset_text("fig4"));
    for (const auto& p : expand(c))
        ASSERT_TRUE(p.target_rate.has_value());
    c = parse_config(*preset_text("fig5"));
    for (const auto& p : expand(c)) {
        ASSERT_TRUE(p.epsilon.has_value());
        EXPECT_EQ(p.scheme, Scheme::Mrc);
    }
}

TEST(Config, ErrorsCarryLineAndField)
{
    auto e = parse_error(std::string(kBase) + "rho_db = 0:40:5\nbogus = 1\n");
    EXPECT_EQ(e.line(), 10);
    EXPECT_EQ(e.field(), "bogus");

    e = parse_error(std::string(kBase) + "rho_db = 0:40:0\n");
    EXPECT_EQ(e.line(), 9);
    EXPECT_EQ(e.field(), "rho_db");

    e = parse_error(std::string(kBase) + "rho_db = [1, x]\n");
    EXPECT_EQ(e.line(), 9);

    e = parse_error(std::string(kBase) + "rho_db = 10\nb1 = 0.5\n");
    EXPECT_EQ(e.line(), 10);
    EXPECT_NE(std::string(e.what()).find("duplicate"), std::string::npos);

    // Range violations point at the field's own line.
    e = parse_error("a1 = 0.4\nb1 = 0.6\nalpha_su1 = 5\nalpha_su2 = 1\nalpha_su3 = 1\nalpha_ru2 = 2\n"
                    "alpha_ru3 = 10\nrho_db = 10\n");
    EXPECT_EQ(e.line(), 1);
    EXPECT_EQ(e.field(), "a1");

    e = parse_error(std::string(kBase) + "rho_db = 10\nmetric = outage\n");
    EXPECT_EQ(e.field(), "target_rate");

    e = parse_error(std::string(kBase) + "rho_db = 10\nepsilon = 0.1\n");
    EXPECT_EQ(e.field(), "epsilon");

    e = parse_error(std::string(kBase) + "rho_db = 10\nscheme = both\n");
    EXPECT_EQ(e.field(), "scheme");

    e = parse_error(std::string("b1 = 0.6\n") + "rho_db = 10\n");
    EXPECT_EQ(e.field(), "a1");

    e = parse_error(std::string(kBase) + "no equals sign\n");
    EXPECT_EQ(e.line(), 9);
}

TEST(Config, EmptySweepIsAnError)
{
    auto e = parse_error(std::string(kBase) + "rho_db = 10:5:1\n");
    EXPECT_EQ(e.field(), "rho_db");
    e = parse_error(std::string(kBase) + "rho_db = []\n");
    EXPECT_EQ(e.field(), "rho_db");
    e = parse_error(std::string(kBase) + "rho_db = 10\nscheme = []\n");
    EXPECT_EQ(e.field(), "scheme");
}

TEST(Config, ZipValidation)
{
    auto e = parse_error(base_without("alpha_su2") + "rho_db = [1, 2, 3]\nalpha_su2 = [1, 2]\nzip = rho_db, alpha_su2\n");
    EXPECT_EQ(e.field(), "zip");
    e = parse_error(std::string(kBase) + "rho_db = [1, 2]\nzip = rho_db, epsilon\n");
    EXPECT_EQ(e.field(), "zip");
    e = parse_error(std::string(kBase) + "rho_db = [1, 2]\nzip = rho_db\n");
    EXPECT_EQ(e.field(), "zip");
}

TEST(Config, CartesianProductWithoutZip)
{
    const auto c = parse_config(base_without("alpha_su2") + "rho_db = [10, 20]\nalpha_su2 = [1, 2, 3]\nscheme = mrc\n");
    const auto points = expand(c);
    ASSERT_EQ(points.size(), 6u);
    // alpha_su2 precedes rho_db canonically, so rho varies fastest.
    EXPECT_EQ(points[0].alpha.su2, 1.0);
    EXPECT_EQ(points[1].alpha.su2, 1.0);
    EXPECT_EQ(points[1].rho_db, 20.0);
    EXPECT_EQ(points[2].alpha.su2, 2.0);
}

TEST(Config, McConfigCarriesSeedAndSamples)
{
    const auto c = parse_config(std::string(kBase) + "rho_db = 10\nseed = 42\nsamples = 1234\n");
    const auto mc = mc_config(c, 3);
    EXPECT_EQ(mc.seed, 42u);
    EXPECT_EQ(mc.samples, 1234u);
    EXPECT_EQ(mc.workers, 3u);
}

}  // namespace
}  // namespace noma::lab
