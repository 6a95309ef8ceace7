// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The noma-lab Authors

#include "noma/analytic.hpp"

#include "noma/specialfn.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace noma::analytic {

namespace {

constexpr double kTailTarget = 1e-14;

double inv_two_ln2() { return 1.0 / (2.0 * std::log(2.0)); }

double big_a(const SystemParams& p) { return p.inv_sum_su() / p.rho(); }
double big_b(const SystemParams& p) { return p.inv_sum_ru() / (p.b2() * p.rho()); }
double small_k(const SystemParams& p) { return 1.0 / (p.a2() * p.rho() * p.alpha().su1); }

using specialfn::exp_e1;

}  // namespace

CcdfFn ccdf_s1(const SystemParams& p)
{
    const double a1 = p.a1(), a2 = p.a2(), rho = p.rho(), s = p.inv_sum_su();
    return {[=](double x) { return std::exp(-x / (a1 * rho - a2 * rho * x) * s); },
            p.x1_ceiling(), 0.0};
}

CcdfFn ccdf_s2_single(const SystemParams& p)
{
    const double b1 = p.b1(), b2 = p.b2(), a2 = p.a2(), rho = p.rho(), s = p.inv_sum_ru();
    const double su1 = p.alpha().su1;
    return {[=](double x) {
                return std::exp(-x / (b1 * rho - b2 * rho * x) * s - x / (a2 * rho * su1));
            },
            p.x2_relay_ceiling(), 0.0};
}

CcdfFn ccdf_s3(const SystemParams& p)
{
    const double lambda = big_b(p);
    return {[=](double x) { return std::exp(-x * lambda); },
            std::numeric_limits<double>::infinity(), lambda};
}

double ergodic_from_ccdf(const CcdfFn& ccdf, const quadrature::Options& options)
{
    double upper = ccdf.support_upper;
    if (!std::isfinite(upper)) {
        const double lambda = ccdf.tail_rate;
        if (!(lambda > 0.0))
            throw std::invalid_argument("ergodic_from_ccdf: infinite support needs a positive tail_rate");
        // Grow X until the majorant exp(-lambda X) / (lambda (1 + X)) of the
        // dropped tail is negligible.
        upper = 1.0 / lambda;
        while (std::exp(-lambda * upper) / (lambda * (1.0 + upper)) > kTailTarget)
            upper *= 2.0;
    }
    if (!(upper > 0.0))
        return 0.0;
    // x = e^u - 1 turns dx / (1 + x) into du.
    const auto integrand = [&](double u) { return ccdf(std::expm1(u)); };
    const auto r = quadrature::integrate(integrand, 0.0, std::log1p(upper), options);
    return r.value * inv_two_ln2();
}

double ergodic_x1_closed(const SystemParams& p)
{
    const double a = big_a(p);
    return (exp_e1(a) - exp_e1(a / p.a2())) * inv_two_ln2();
}

double ergodic_x2_single_approx(const SystemParams& p)
{
    const double k = small_k(p);
    const double ratio = p.b1() / p.b2();
    // e^k (Ei(-k(1+r)) - Ei(-k)) = e^k E1(k) - e^{-k r} e^{k(1+r)} E1(k(1+r))
    return (exp_e1(k) - std::exp(-k * ratio) * exp_e1(k * (1.0 + ratio))) * inv_two_ln2();
}

double detail::x2_single_sum_term(const SystemParams& p)
{
    const double k = small_k(p);
    const double arg = 1.0 / (p.a2() * p.b2() * p.rho() * p.alpha().su1);
    return (exp_e1(k) - std::exp(k - arg) * exp_e1(arg)) * inv_two_ln2();
}

double ergodic_xr_closed(const SystemParams& p)
{
    return exp_e1(big_b(p)) * inv_two_ln2();
}

std::string_view to_string(ReportKind kind) noexcept
{
    switch (kind) {
    case ReportKind::Exact: return "exact";
    case ReportKind::HighSnrApprox: return "high_snr_approx";
    case ReportKind::EcLnApprox: return "ecln_approx";
    }
    return "?";
}

std::string_view to_string(MrcX2Variant v) noexcept
{
    return v == MrcX2Variant::Literal ? "literal" : "retain_factor";
}

bool high_snr_warning(const SystemParams& p) noexcept { return p.rho() < 100.0; }

namespace {

AnalyticReport make_report(double x1, double x2, double xr, ReportKind kind, const SystemParams& p)
{
    AnalyticReport r;
    r.x1 = x1;
    r.x2 = x2;
    r.xr = xr;
    r.sum = x1 + x2 + xr;
    r.kind = kind;
    r.low_snr_warning = kind != ReportKind::Exact && high_snr_warning(p);
    return r;
}

}  // namespace

AnalyticReport ergodic_sum_single(const SystemParams& p)
{
    return make_report(ergodic_x1_closed(p), detail::x2_single_sum_term(p), ergodic_xr_closed(p),
                       ReportKind::HighSnrApprox, p);
}

AnalyticReport ergodic_sum_single_exact(const SystemParams& p, const quadrature::Options& options)
{
    return make_report(ergodic_from_ccdf(ccdf_s1(p), options),
                       ergodic_from_ccdf(ccdf_s2_single(p), options),
                       ergodic_from_ccdf(ccdf_s3(p), options), ReportKind::Exact, p);
}

double ec_sign()
{
    static const double sign = [] {
        const double x = 1e-3;
        const double ref = specialfn::ei(-x).value;
        const double plus = specialfn::euler_gamma() + std::log(x);
        const double minus = -specialfn::euler_gamma() + std::log(x);
        return std::abs(plus - ref) <= std::abs(minus - ref) ? 1.0 : -1.0;
    }();
    return sign;
}

double ergodic_sum_single_ecln(const SystemParams& p)
{
    const double ec = ec_sign() * specialfn::euler_gamma();
    const double a = big_a(p), b = big_b(p), k = small_k(p);
    const double a1 = p.a1(), a2 = p.a2();
    const double x1 = -std::log(a2) + (a / a2) * (a1 * ec + a1 * std::log(a) - std::log(a2));
    const double x2 = -(1.0 + k) * std::log(p.b2());
    const double xr = -(1.0 + b) * (ec + std::log(b));
    return (x1 + x2 + xr) * inv_two_ln2();
}

double ergodic_x2_mrc_approx(const SystemParams& p, MrcX2Variant variant)
{
    const double x = big_a(p) / p.a2();
    double v = exp_e1(x) * inv_two_ln2();
    if (variant == MrcX2Variant::RetainFactor)
        v *= std::exp(p.b1() / (p.b2() * p.rho()) * p.inv_sum_ru());
    return v;
}

AnalyticReport ergodic_sum_mrc(const SystemParams& p, MrcX2Variant variant)
{
    return make_report(ergodic_x1_closed(p), ergodic_x2_mrc_approx(p, variant), ergodic_xr_closed(p),
                       ReportKind::HighSnrApprox, p);
}

double ergodic_sum_mrc_ecln(const SystemParams& p)
{
    const double ec = ec_sign() * specialfn::euler_gamma();
    const double a = big_a(p), b = big_b(p);
    return (-(1.0 + a) * (ec + std::log(a)) - (1.0 + b) * (ec + std::log(b))) * inv_two_ln2();
}

Probability outage_mrc_closed(const SystemParams& p, const OutageSpec& spec)
{
    const double rho = p.rho(), a1 = p.a1(), a2 = p.a2(), b2 = p.b2();
    const double w1 = spec.w1(), w2 = spec.w2(), wr = spec.wr();
    const double ratio = p.x2_relay_ceiling();
    const double e1 = w1 / (a1 * rho - a2 * rho * w1) * p.inv_sum_su();
    const double er = wr / (b2 * rho) * p.inv_sum_ru();
    const double su = p.inv_sum_su() / (a2 * rho);

    Probability out;
    out.literal = 1.0 - std::exp(-e1 - er - (w2 - ratio) * su);
    if (w1 >= p.x1_ceiling() || w2 >= ratio) {
        out.value = 1.0;
        return out;
    }
    out.value = std::clamp(1.0 - std::exp(-e1 - er - std::max(w2 - ratio, 0.0) * su), 0.0, 1.0);
    return out;
}

double outage_single_closed(const SystemParams& p, const OutageSpec& spec)
{
    const double rho = p.rho(), a1 = p.a1(), a2 = p.a2(), b1 = p.b1(), b2 = p.b2();
    const double w1 = spec.w1(), w2 = spec.w2(), wr = spec.wr();
    if (w1 >= p.x1_ceiling() || w2 >= p.x2_relay_ceiling())
        return 1.0;
    const auto& al = p.alpha();
    // Success needs beta_SU1 above both its x1 and x2 requirements and each
    // relay link above both its x2 and xr requirements.
    const double t1 = w1 / (rho * (a1 - a2 * w1));
    const double t2 = w2 / (rho * (b1 - b2 * w2));
    const double rate = std::max(t1, w2 / (a2 * rho)) / al.su1 + t1 / al.su2 + t1 / al.su3 +
                        std::max(t2, wr / (b2 * rho)) * p.inv_sum_ru();
    return std::clamp(-std::expm1(-rate), 0.0, 1.0);
}

OutageCapacity outage_capacity_mrc(const SystemParams& p, double epsilon)
{
    if (!(epsilon > 0.0 && epsilon < 1.0))
        throw std::invalid_argument("outage_capacity_mrc: epsilon must lie in (0, 1)");
    const double rho = p.rho(), a2 = p.a2(), b1 = p.b1(), b2 = p.b2();
    const double su = p.inv_sum_su(), ru = p.inv_sum_ru();
    OutageCapacity out;
    out.literal_threshold =
        (epsilon + b1 / (a2 * b2 * rho) * su) / (ru / (b2 * rho) + su / (a2 * rho));
    out.threshold = std::clamp(out.literal_threshold, 0.0, p.x1_ceiling());
    out.capacity = 0.5 * std::log2(1.0 + out.threshold);
    return out;
}

}  // namespace noma::analytic
