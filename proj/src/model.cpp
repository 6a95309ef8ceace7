// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The noma-lab Authors

#include "noma/model.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace noma {

std::string_view to_string(Scheme scheme) noexcept
{
    switch (scheme) {
    case Scheme::SingleSignal:
        return "single";
    case Scheme::Mrc:
        return "mrc";
    }
    return "?";
}

std::optional<Scheme> parse_scheme(std::string_view text) noexcept
{
    if (text == "single" || text == "single_signal")
        return Scheme::SingleSignal;
    if (text == "mrc")
        return Scheme::Mrc;
    return std::nullopt;
}

namespace {

void require_positive(double v, const char* name)
{
    if (!std::isfinite(v) || v <= 0.0)
        throw std::invalid_argument(std::string(name) + " must be finite and > 0");
}

}  // namespace

SystemParams::SystemParams(double a1, double b1, double rho, LinkPowers alpha)
    : a1_(a1), a2_(1.0 - a1), b1_(b1), b2_(1.0 - b1), rho_(rho), alpha_(alpha)
{
    if (!(a1 > 0.5 && a1 < 1.0))
        throw std::invalid_argument("a1 must lie in (0.5, 1)");
    if (!(b1 > 0.0 && b1 < 1.0))
        throw std::invalid_argument("b1 must lie in (0, 1)");
    require_positive(rho, "rho");
    require_positive(alpha.su1, "alpha_su1");
    require_positive(alpha.su2, "alpha_su2");
    require_positive(alpha.su3, "alpha_su3");
    require_positive(alpha.ru2, "alpha_ru2");
    require_positive(alpha.ru3, "alpha_ru3");
}

double SystemParams::inv_sum_su() const noexcept
{
    return 1.0 / alpha_.su1 + 1.0 / alpha_.su2 + 1.0 / alpha_.su3;
}

double SystemParams::inv_sum_ru() const noexcept
{
    return 1.0 / alpha_.ru2 + 1.0 / alpha_.ru3;
}

double db_to_linear(double db) noexcept { return std::pow(10.0, db / 10.0); }

namespace {

// Post-SIC SINR of the stronger-power symbol: hi * g / (lo * g + 1), g = beta*rho.
// Operation order is mirrored by the batch kernels; keep them in sync.
inline double sic_sinr(double hi, double lo, double beta, double rho) noexcept
{
    const double g = beta * rho;
    return (hi * g) / (lo * g + 1.0);
}

}  // namespace

RelaySnr snr_relay(const SystemParams& p, const ChannelRealization& ch) noexcept
{
    const double g = ch.beta_su1 * p.rho();
    return {sic_sinr(p.a1(), p.a2(), ch.beta_su1, p.rho()), p.a2() * g};
}

SnrBreakdown snr_breakdown(Scheme scheme, const SystemParams& p,
                           const ChannelRealization& ch) noexcept
{
    const double rho = p.rho();
    SnrBreakdown out;
    out.s1 = std::min(std::min(sic_sinr(p.a1(), p.a2(), ch.beta_su1, rho),
                               sic_sinr(p.a1(), p.a2(), ch.beta_su2, rho)),
                      sic_sinr(p.a1(), p.a2(), ch.beta_su3, rho));

    double relay2 = sic_sinr(p.b1(), p.b2(), ch.beta_ru2, rho);
    double relay3 = sic_sinr(p.b1(), p.b2(), ch.beta_ru3, rho);
    if (scheme == Scheme::Mrc) {
        relay2 += p.a2() * (ch.beta_su2 * rho);
        relay3 += p.a2() * (ch.beta_su3 * rho);
    }
    out.s2 = std::min(std::min(p.a2() * (ch.beta_su1 * rho), relay2), relay3);
    out.s3 = std::min(p.b2() * (ch.beta_ru2 * rho), p.b2() * (ch.beta_ru3 * rho));
    return out;
}

double half_rate(double snr) noexcept { return 0.5 * std::log2(1.0 + snr); }

double sum_rate(Scheme scheme, const SystemParams& p, const ChannelRealization& ch) noexcept
{
    const auto s = snr_breakdown(scheme, p, ch);
    return half_rate(s.s1) + half_rate(s.s2) + half_rate(s.s3);
}

}  // namespace noma
