// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The noma-lab Authors

#pragma once

#include "noma/model.hpp"
#include "noma/outage_spec.hpp"
#include "noma/quadrature.hpp"

#include <functional>
#include <limits>
#include <string_view>

/// Closed-form and high-SNR evaluators of the ergodic rates and outage
/// metrics, with every expression written in terms of the average link
/// powers alpha.
///
/// Shorthand used below, with S_SU = sum 1/alpha_SUi and S_RU = sum 1/alpha_RUi:
///   A = S_SU / rho,  B = S_RU / (b2 rho),  k = 1 / (a2 rho alpha_SU1).
namespace noma::analytic {

/// Complementary CDF x -> P(S > x) on x >= 0, identically 0 beyond support_upper.
struct CcdfFn {
    std::function<double(double)> eval;
    double support_upper = std::numeric_limits<double>::infinity();
    /// For infinite support: lambda with F(x) <= exp(-lambda x).
    double tail_rate = 0.0;

    double operator()(double x) const { return x >= support_upper ? 0.0 : eval(x); }
};

CcdfFn ccdf_s1(const SystemParams& params);
CcdfFn ccdf_s2_single(const SystemParams& params);
CcdfFn ccdf_s3(const SystemParams& params);

/// (1 / (2 ln 2)) * integral_0^inf F(x) / (1 + x) dx by adaptive quadrature.
/// Throws quadrature::QuadratureError when the tolerance is not reached.
double ergodic_from_ccdf(const CcdfFn& ccdf, const quadrature::Options& options = {});

double ergodic_x1_closed(const SystemParams& params);
/// High-SNR x2 rate of the single-signal scheme:
/// e^k (Ei(-k (1 + b1/b2)) - Ei(-k)) / (2 ln 2).
double ergodic_x2_single_approx(const SystemParams& params);
double ergodic_xr_closed(const SystemParams& params);

enum class ReportKind { Exact, HighSnrApprox, EcLnApprox };
std::string_view to_string(ReportKind kind) noexcept;

struct AnalyticReport {
    double x1 = 0.0;
    double x2 = 0.0;
    double xr = 0.0;
    double sum = 0.0;
    ReportKind kind = ReportKind::Exact;
    bool low_snr_warning = false;
};

/// True when rho < 100, below which the high-SNR forms are not trusted.
bool high_snr_warning(const SystemParams& params) noexcept;

/// Closed-form x1 and xr with the high-SNR x2 term.
AnalyticReport ergodic_sum_single(const SystemParams& params);
/// Quadrature of the three exact single-signal CCDFs.
AnalyticReport ergodic_sum_single_exact(const SystemParams& params,
                                        const quadrature::Options& options = {});
/// Small-argument expansion Ei(-x) ~ Ec + ln x, e^x ~ 1 + x of the sum.
double ergodic_sum_single_ecln(const SystemParams& params);

/// The x2 term of the MRC scheme. Literal keeps only -e^X Ei(-X)/(2 ln 2)
/// with X = A/a2; RetainFactor also keeps e^{b1 S_RU / (b2 rho)}.
enum class MrcX2Variant { Literal, RetainFactor };
std::string_view to_string(MrcX2Variant v) noexcept;

double ergodic_x2_mrc_approx(const SystemParams& params,
                             MrcX2Variant variant = MrcX2Variant::RetainFactor);
AnalyticReport ergodic_sum_mrc(const SystemParams& params,
                               MrcX2Variant variant = MrcX2Variant::RetainFactor);
double ergodic_sum_mrc_ecln(const SystemParams& params);

/// Sign s of the constant in Ei(-x) ~ s*gamma + ln x, picked by comparing both
/// signs against Ei at x = 1e-3.
double ec_sign();

/// A probability together with the value before any flooring or clamping.
struct Probability {
    double value = 0.0;
    double literal = 0.0;
};

/// MRC outage from the product of K1, K2, Kr. The default floors the
/// (w2 - b1/b2) term at 0 and clamps to [0, 1]; `literal` is the unfloored,
/// unclamped expression.
Probability outage_mrc_closed(const SystemParams& params, const OutageSpec& spec);

/// Exact single-signal outage. The three SNRs share beta_SU1 and the relay
/// links, so the success probability is one joint exponential tail rather
/// than a product of the marginal CCDFs.
double outage_single_closed(const SystemParams& params, const OutageSpec& spec);

struct OutageCapacity {
    double capacity = 0.0;          ///< 0.5 log2(1 + W)
    double threshold = 0.0;         ///< W after clamping to [0, a1/a2]
    double literal_threshold = 0.0; ///< W straight from the affine formula
};

/// High-SNR MRC outage capacity with the common threshold W_M.
OutageCapacity outage_capacity_mrc(const SystemParams& params, double epsilon);

namespace detail {
/// x2 term as it appears inside the single-signal sum (argument 1/(a2 b2 rho alpha_SU1)).
double x2_single_sum_term(const SystemParams& params);
}  // namespace detail

}  // namespace noma::analytic
