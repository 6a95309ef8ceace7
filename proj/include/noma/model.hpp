// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The noma-lab Authors

#pragma once

#include <optional>
#include <string_view>

namespace noma {

/// How UE2/UE3 treat the phase-1 broadcast.
enum class Scheme {
    SingleSignal,  ///< decode immediately after phase 1
    Mrc,           ///< hold the phase-1 reception and combine it in phase 2
};

std::string_view to_string(Scheme scheme) noexcept;
std::optional<Scheme> parse_scheme(std::string_view text) noexcept;

/// Average powers of the five Rayleigh links.
struct LinkPowers {
    double su1 = 1.0;
    double su2 = 1.0;
    double su3 = 1.0;
    double ru2 = 1.0;
    double ru3 = 1.0;

    friend bool operator==(const LinkPowers&, const LinkPowers&) = default;
};

/// Static scenario: power split at the BS and relay, transmit SNR, link
/// averages. Validated on construction (std::invalid_argument).
class SystemParams {
public:
    SystemParams(double a1, double b1, double rho, LinkPowers alpha);

    double a1() const noexcept { return a1_; }
    double a2() const noexcept { return a2_; }
    double b1() const noexcept { return b1_; }
    double b2() const noexcept { return b2_; }
    /// Linear transmit SNR P_t / sigma^2.
    double rho() const noexcept { return rho_; }
    const LinkPowers& alpha() const noexcept { return alpha_; }

    /// 1/alpha_su1 + 1/alpha_su2 + 1/alpha_su3
    double inv_sum_su() const noexcept;
    /// 1/alpha_ru2 + 1/alpha_ru3
    double inv_sum_ru() const noexcept;

    /// SIC ceiling a1/a2 on the effective SNR of x1.
    double x1_ceiling() const noexcept { return a1_ / a2_; }
    /// Relay-side ceiling b1/b2 on the phase-2 SINR of x2.
    double x2_relay_ceiling() const noexcept { return b1_ / b2_; }

    SystemParams with_rho(double rho) const { return {a1_, b1_, rho, alpha_}; }

    friend bool operator==(const SystemParams&, const SystemParams&) = default;

private:
    double a1_;
    double a2_;
    double b1_;
    double b2_;
    double rho_;
    LinkPowers alpha_;
};

double db_to_linear(double db) noexcept;

/// One draw of the squared channel magnitudes |h|^2.
struct ChannelRealization {
    double beta_su1 = 0.0;
    double beta_su2 = 0.0;
    double beta_su3 = 0.0;
    double beta_ru2 = 0.0;
    double beta_ru3 = 0.0;
};

/// Effective SNR per symbol (x1, x2, xr) after taking the minimum over the
/// users that must decode it.
struct SnrBreakdown {
    double s1 = 0.0;
    double s2 = 0.0;
    double s3 = 0.0;
};

struct RelaySnr {
    double gamma_x1;
    double gamma_x2;
};

/// SIC SNRs of x1 and x2 at the relay UE1.
RelaySnr snr_relay(const SystemParams& params, const ChannelRealization& ch) noexcept;

SnrBreakdown snr_breakdown(Scheme scheme, const SystemParams& params,
                           const ChannelRealization& ch) noexcept;

/// 0.5 * log2(1 + snr): one symbol's rate over the two-phase frame.
double half_rate(double snr) noexcept;

/// Instantaneous sum rate in bits/s/Hz.
double sum_rate(Scheme scheme, const SystemParams& params,
                const ChannelRealization& ch) noexcept;

}  // namespace noma
