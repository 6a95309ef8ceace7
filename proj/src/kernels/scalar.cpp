// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The noma-lab Authors

#include "det_log.hpp"
#include "noma/kernels.hpp"

#include <algorithm>

namespace noma::kernels::scalar {

void snr_from_uniforms(Scheme scheme, const SystemParams& p, const UniformBlock& u,
                       SnrBlock out)
{
    const double rho = p.rho();
    const double a1 = p.a1(), a2 = p.a2(), b1 = p.b1(), b2 = p.b2();
    const auto& al = p.alpha();
    const bool mrc = scheme == Scheme::Mrc;
    const std::size_t n = u.size();
    for (std::size_t i = 0; i < n; ++i) {
        const double g1 = (al.su1 * (0.0 - detail::log_positive(u.field[0][i]))) * rho;
        const double g2 = (al.su2 * (0.0 - detail::log_positive(u.field[1][i]))) * rho;
        const double g3 = (al.su3 * (0.0 - detail::log_positive(u.field[2][i]))) * rho;
        const double h2 = (al.ru2 * (0.0 - detail::log_positive(u.field[3][i]))) * rho;
        const double h3 = (al.ru3 * (0.0 - detail::log_positive(u.field[4][i]))) * rho;

        const double x1a = (a1 * g1) / (a2 * g1 + 1.0);
        const double x1b = (a1 * g2) / (a2 * g2 + 1.0);
        const double x1c = (a1 * g3) / (a2 * g3 + 1.0);
        out.s1[i] = std::min(std::min(x1a, x1b), x1c);

        double r2 = (b1 * h2) / (b2 * h2 + 1.0);
        double r3 = (b1 * h3) / (b2 * h3 + 1.0);
        if (mrc) {
            r2 += a2 * g2;
            r3 += a2 * g3;
        }
        out.s2[i] = std::min(std::min(a2 * g1, r2), r3);
        out.s3[i] = std::min(b2 * h2, b2 * h3);
    }
}

void half_rates(std::span<const double> snr, std::span<double> out)
{
    for (std::size_t i = 0; i < snr.size(); ++i)
        out[i] = detail::log_positive(1.0 + snr[i]) * detail::kHalfInvLn2;
}

}  // namespace noma::kernels::scalar
