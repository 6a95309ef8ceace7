// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The noma-lab Authors

#include "noma/lab/sweep.hpp"

#include "noma/analytic.hpp"
#include "noma/montecarlo.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <ostream>

namespace noma::lab {

namespace {

Row base_row(const SweepPoint& p, std::string_view metric)
{
    Row r;
    r.scheme = std::string(to_string(p.scheme));
    r.metric = std::string(metric);
    r.rho_db = p.rho_db;
    r.a1 = p.a1;
    r.b1 = p.b1;
    r.alpha_su1 = p.alpha.su1;
    r.alpha_su2 = p.alpha.su2;
    r.alpha_su3 = p.alpha.su3;
    r.alpha_ru2 = p.alpha.ru2;
    r.alpha_ru3 = p.alpha.ru3;
    r.target_rate = p.target_rate;
    r.epsilon = p.epsilon;
    r.warn_low_snr = analytic::high_snr_warning(p.params());
    return r;
}

void set_estimate(Row& r, const mc::Estimate& e)
{
    r.value = e.mean;
    r.std_error = e.std_error;
}

/// Evaluates `f`, turning numerical failures into the row's error text.
std::optional<double> guarded(Row& row, double scale, const std::function<double()>& f)
{
    try {
        return f() * scale;
    } catch (const quadrature::QuadratureError& e) {
        if (!row.error.empty())
            row.error += "; ";
        row.error += e.what();
        return std::nullopt;
    }
}

OutageSpec spec_of(const ExperimentConfig& c, const SweepPoint& p)
{
    return OutageSpec::common_rate(*p.target_rate, c.convention);
}

}  // namespace

Table run_sweep(const ExperimentConfig& config, const RunOptions& options)
{
    const auto points = expand(config);
    const auto mc = mc_config(config, options.workers);
    const double k = options.analytic_scale;
    Table t;
    for (const auto& p : points) {
        const auto params = p.params();
        const bool single = p.scheme == Scheme::SingleSignal;
        switch (config.metric) {
        case Metric::ErgodicSum: {
            Row r = base_row(p, "ergodic_sum");
            set_estimate(r, mc::estimate_ergodic_sum_rate(p.scheme, params, mc));
            if (single) {
                r.analytic_exact = guarded(r, k, [&] { return analytic::ergodic_sum_single_exact(params).sum; });
                r.analytic_approx = guarded(r, k, [&] { return analytic::ergodic_sum_single(params).sum; });
            } else {
                r.analytic_approx = guarded(r, k, [&] { return analytic::ergodic_sum_mrc(params).sum; });
            }
            t.rows.push_back(std::move(r));
            break;
        }
        case Metric::PerSymbolRates: {
            const auto est = mc::estimate_per_symbol_rates(p.scheme, params, mc);
            Row x1 = base_row(p, "rate_x1");
            set_estimate(x1, est.x1);
            x1.analytic_exact = guarded(x1, k, [&] { return analytic::ergodic_x1_closed(params); });
            Row x2 = base_row(p, "rate_x2");
            set_estimate(x2, est.x2);
            if (single) {
                x2.analytic_exact = guarded(x2, k, [&] {
                    return analytic::ergodic_from_ccdf(analytic::ccdf_s2_single(params));
                });
                x2.analytic_approx = guarded(x2, k, [&] { return analytic::ergodic_x2_single_approx(params); });
            } else {
                x2.analytic_approx = guarded(x2, k, [&] { return analytic::ergodic_x2_mrc_approx(params); });
            }
            Row xr = base_row(p, "rate_xr");
            set_estimate(xr, est.xr);
            xr.analytic_exact = guarded(xr, k, [&] { return analytic::ergodic_xr_closed(params); });
            t.rows.push_back(std::move(x1));
            t.rows.push_back(std::move(x2));
            t.rows.push_back(std::move(xr));
            break;
        }
        case Metric::Outage: {
            Row r = base_row(p, "outage");
            const auto spec = spec_of(config, p);
            set_estimate(r, mc::estimate_outage(p.scheme, params, spec, mc));
            if (single)
                r.analytic_exact = analytic::outage_single_closed(params, spec) * k;
            else
                r.analytic_approx = analytic::outage_mrc_closed(params, spec).value * k;
            t.rows.push_back(std::move(r));
            break;
        }
        case Metric::OutageCapacity: {
            Row r = base_row(p, "outage_capacity");
            set_estimate(r, mc::estimate_outage_capacity(p.scheme, params, *p.epsilon, mc));
            if (!single)
                r.analytic_approx = analytic::outage_capacity_mrc(params, *p.epsilon).capacity * k;
            t.rows.push_back(std::move(r));
            break;
        }
        }
    }
    return t;
}

namespace {

constexpr double kExactSigmas = 3.0;
constexpr double kErgodicRel = 0.05;
constexpr double kErgodicMinDb = 30.0;
constexpr double kOutageAbs = 0.02;
constexpr double kOutageMinDb = 25.0;
constexpr double kCapacityRel = 0.10;
constexpr double kCapacityMinDb = 20.0;

Check compare(std::string quantity, std::string reference, const mc::Estimate& est, double analytic)
{
    Check c;
    c.quantity = std::move(quantity);
    c.reference = std::move(reference);
    c.mc = est.mean;
    c.std_error = est.std_error;
    c.analytic = analytic;
    c.abs_gap = std::abs(analytic - est.mean);
    c.rel_gap = est.mean != 0.0 ? c.abs_gap / std::abs(est.mean) : (c.abs_gap == 0.0 ? 0.0 : INFINITY);
    return c;
}

Check within_sigmas(Check c, double resolution)
{
    // A zero-count binomial estimate reports se = 0; 1/n is the resolution.
    c.rule = "3se";
    c.tolerance = kExactSigmas * std::max(c.std_error, resolution);
    c.pass = c.abs_gap <= c.tolerance;
    return c;
}

Check within_relative(Check c, double rel, bool in_region)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "rel<=%g", rel);
    c.rule = buf;
    c.tolerance = rel * std::abs(c.mc);
    c.in_region = in_region;
    c.pass = c.abs_gap <= c.tolerance;
    return c;
}

Check informational(Check c)
{
    c.rule = "info";
    c.gating = false;
    c.in_region = false;
    return c;
}

}  // namespace

ValidationReport run_validate(const ExperimentConfig& config, const RunOptions& options)
{
    const auto points = expand(config);
    const auto mc = mc_config(config, options.workers);
    const double k = options.analytic_scale;
    const double resolution = 1.0 / static_cast<double>(mc.samples);
    ValidationReport report;
    report.metric = config.metric;
    report.convention = config.convention;

    for (const auto& p : points) {
        PointReport pr;
        pr.point = p;
        const auto params = p.params();
        const bool single = p.scheme == Scheme::SingleSignal;
        const bool ergodic_region = p.rho_db >= kErgodicMinDb;
        try {
            auto mrc_x2_checks = [&](const std::string& quantity, const mc::Estimate& est, double others) {
                const double retain =
                    others + analytic::ergodic_x2_mrc_approx(params, analytic::MrcX2Variant::RetainFactor);
                const double literal =
                    others + analytic::ergodic_x2_mrc_approx(params, analytic::MrcX2Variant::Literal);
                pr.checks.push_back(
                    within_relative(compare(quantity, "mrc_high_snr_retain_factor", est, retain * k), kErgodicRel,
                                    ergodic_region));
                pr.checks.push_back(informational(compare(quantity, "mrc_high_snr_literal", est, literal * k)));
                pr.x2_mrc_winner = std::abs(retain - est.mean) <= std::abs(literal - est.mean) ? "retain_factor"
                                                                                              : "literal";
            };

            switch (config.metric) {
            case Metric::ErgodicSum: {
                const auto est = mc::estimate_ergodic_sum_rate(p.scheme, params, mc);
                if (single) {
                    pr.checks.push_back(within_sigmas(
                        compare("sum", "exact_quadrature", est, analytic::ergodic_sum_single_exact(params).sum * k),
                        0.0));
                    pr.checks.push_back(within_relative(
                        compare("sum", "single_high_snr", est, analytic::ergodic_sum_single(params).sum * k),
                        kErgodicRel, ergodic_region));
                } else {
                    mrc_x2_checks("sum", est,
                                  analytic::ergodic_x1_closed(params) + analytic::ergodic_xr_closed(params));
                }
                break;
            }
            case Metric::PerSymbolRates: {
                const auto est = mc::estimate_per_symbol_rates(p.scheme, params, mc);
                pr.checks.push_back(
                    within_sigmas(compare("x1", "exact_closed", est.x1, analytic::ergodic_x1_closed(params) * k), 0.0));
                if (single) {
                    pr.checks.push_back(within_sigmas(
                        compare("x2", "exact_quadrature", est.x2,
                                analytic::ergodic_from_ccdf(analytic::ccdf_s2_single(params)) * k),
                        0.0));
                    pr.checks.push_back(within_relative(
                        compare("x2", "single_high_snr", est.x2, analytic::ergodic_x2_single_approx(params) * k),
                        kErgodicRel, ergodic_region));
                } else {
                    mrc_x2_checks("x2", est.x2, 0.0);
                }
                pr.checks.push_back(
                    within_sigmas(compare("xr", "exact_closed", est.xr, analytic::ergodic_xr_closed(params) * k), 0.0));
                break;
            }
            case Metric::Outage: {
                const auto spec = spec_of(config, p);
                const auto est = mc::estimate_outage(p.scheme, params, spec, mc);
                // The same closed form with the target rate mapped through the
                // other convention; the closer of the two is reported.
                const auto other_convention = config.convention == ThresholdConvention::TwoPhase
                                                  ? ThresholdConvention::Literal
                                                  : ThresholdConvention::TwoPhase;
                const auto other = OutageSpec::common_rate(*p.target_rate, other_convention);
                const auto closed_of = [&](const OutageSpec& s) {
                    return single ? analytic::outage_single_closed(params, s)
                                  : analytic::outage_mrc_closed(params, s).value;
                };
                const double own_value = closed_of(spec);
                const double other_value = closed_of(other);
                pr.convention_match = std::string(to_string(
                    std::abs(own_value - est.mean) <= std::abs(other_value - est.mean) ? config.convention
                                                                                       : other_convention));
                if (single) {
                    pr.checks.push_back(within_sigmas(
                        compare("outage", "exact_joint", est, analytic::outage_single_closed(params, spec) * k),
                        resolution));
                    pr.checks.push_back(informational(compare(
                        "outage", "exact_joint@" + std::string(to_string(other_convention)), est, other_value * k)));
                } else {
                    const auto closed = analytic::outage_mrc_closed(params, spec);
                    Check c = compare("outage", "mrc_floored", est, closed.value * k);
                    c.rule = "max(0.02,3se)";
                    c.tolerance = std::max(kOutageAbs, kExactSigmas * est.std_error);
                    c.in_region = p.rho_db >= kOutageMinDb;
                    c.pass = c.abs_gap <= c.tolerance;
                    pr.checks.push_back(c);
                    pr.checks.push_back(informational(compare("outage", "mrc_literal", est, closed.literal * k)));
                    pr.checks.push_back(informational(compare(
                        "outage", "mrc_floored@" + std::string(to_string(other_convention)), est, other_value * k)));
                    pr.outage_winner = std::abs(closed.value - est.mean) <= std::abs(closed.literal - est.mean)
                                           ? "floored"
                                           : "literal";
                }
                break;
            }
            case Metric::OutageCapacity: {
                if (single)
                    break;
                const auto est = mc::estimate_outage_capacity(p.scheme, params, *p.epsilon, mc);
                const auto closed = analytic::outage_capacity_mrc(params, *p.epsilon);
                const bool region = p.rho_db >= kCapacityMinDb && closed.literal_threshold < params.x1_ceiling();
                pr.checks.push_back(
                    within_relative(compare("capacity", "mrc_high_snr", est, closed.capacity * k), kCapacityRel, region));
                break;
            }
            }
        } catch (const quadrature::QuadratureError& e) {
            pr.error = e.what();
        }

        for (const auto& c : pr.checks) {
            if (c.gating && c.in_region) {
                ++report.checked;
                if (!c.pass)
                    ++report.failed;
            }
        }
        if (!pr.error.empty())
            ++report.failed;
        report.points.push_back(std::move(pr));
    }
    return report;
}

void write_report(std::ostream& out, const ValidationReport& report)
{
    auto num = [](double v) {
        char buf[40];
        std::snprintf(buf, sizeof buf, "%.10g", v);
        return std::string(buf);
    };
    out << "scheme,metric,rho_db,a1,b1,target_rate,epsilon,quantity,reference,mc,std_error,analytic,"
           "abs_gap,rel_gap,rule,tolerance,in_region,result,x2_mrc_winner,outage_winner,threshold_convention,"
           "convention_match,error\n";
    const std::string convention =
        report.metric == Metric::Outage ? std::string(to_string(report.convention)) : std::string();
    for (const auto& pr : report.points) {
        const auto& p = pr.point;
        const std::string prefix = std::string(to_string(p.scheme)) + "," + std::string(to_string(report.metric)) + "," + num(p.rho_db) + "," + num(p.a1) +
                                   "," + num(p.b1) + "," + (p.target_rate ? num(*p.target_rate) : "") + "," +
                                   (p.epsilon ? num(*p.epsilon) : "") + ",";
        if (!pr.error.empty()) {
            std::string err = pr.error;
            for (auto& ch : err)
                if (ch == ',' || ch == '\n')
                    ch = ';';
            out << prefix << ",,,,,,,,,,,error,,," << convention << ",," << err << '\n';
            continue;
        }
        for (const auto& c : pr.checks) {
            const char* result = !c.gating ? "info" : !c.in_region ? "outside_region" : c.pass ? "pass" : "FAIL";
            out << prefix << c.quantity << ',' << c.reference << ',' << num(c.mc) << ',' << num(c.std_error) << ','
                << num(c.analytic) << ',' << num(c.abs_gap) << ',' << num(c.rel_gap) << ',' << c.rule << ','
                << num(c.tolerance) << ',' << (c.in_region ? 1 : 0) << ',' << result << ',' << pr.x2_mrc_winner
                << ',' << pr.outage_winner << ',' << convention << ',' << pr.convention_match << ",\n";
        }
    }
}

}  // namespace noma::lab
