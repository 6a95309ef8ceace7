// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The noma-lab Authors

#pragma once

#include "noma/lab/config.hpp"
#include "noma/lab/table.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace noma::lab {

struct RunOptions {
    /// Monte Carlo worker threads; never changes results.
    unsigned workers = 1;
    /// Multiplies every analytic value. Anything but 1 is a deliberate
    /// corruption used as a negative control for `validate`.
    double analytic_scale = 1.0;
};

/// One row per (scheme, sweep point); per_symbol_rates emits three rows
/// (rate_x1, rate_x2, rate_xr). Quadrature failures land in the row's error
/// cell.
///
/// analytic_exact / analytic_approx hold:
///   ergodic_sum       single: quadrature of the exact CCDFs / high-SNR closed form
///                     mrc:    (none) / high-SNR form with the retained factor
///   per_symbol_rates  x1, xr: closed form / (none); x2 as ergodic_sum
///   outage            single: exact joint form / (none); mrc: (none) / floored form
///   outage_capacity   mrc: (none) / high-SNR closed form; single: (none)
Table run_sweep(const ExperimentConfig& config, const RunOptions& options = {});

/// A single MC-vs-analytic comparison.
struct Check {
    std::string quantity;   ///< sum, x1, x2, xr, outage, capacity
    std::string reference;  ///< analytic form compared against
    double mc = 0.0;
    double std_error = 0.0;
    double analytic = 0.0;
    double abs_gap = 0.0;
    double rel_gap = 0.0;
    std::string rule;       ///< tolerance rule, e.g. "3se" or "rel<=0.05"
    double tolerance = 0.0; ///< absolute tolerance implied by the rule
    bool gating = true;     ///< false for informational variants
    bool in_region = true;  ///< inside the rule's validity region
    bool pass = true;
};

struct PointReport {
    SweepPoint point;
    std::vector<Check> checks;
    std::string x2_mrc_winner;   ///< literal | retain_factor (MRC ergodic metrics)
    std::string outage_winner;   ///< floored | literal (MRC outage)
    /// Outage: the rate-to-threshold convention whose closed form lies closer
    /// to the Monte Carlo estimate.
    std::string convention_match;
    std::string error;
};

struct ValidationReport {
    Metric metric = Metric::ErgodicSum;
    ThresholdConvention convention = ThresholdConvention::TwoPhase;
    std::vector<PointReport> points;
    std::size_t checked = 0;  ///< gating checks inside their region
    std::size_t failed = 0;   ///< of those, failing (plus points with errors)

    bool passed() const noexcept { return failed == 0; }
};

/// Tolerances: exact forms within 3 std errors everywhere; high-SNR ergodic
/// forms within 5% for rho >= 30 dB; MRC outage within max(0.02, 3 se) for
/// rho >= 25 dB; MRC outage capacity within 10% for rho >= 20 dB when the
/// unclamped threshold stays below a1/a2.
ValidationReport run_validate(const ExperimentConfig& config, const RunOptions& options = {});

void write_report(std::ostream& out, const ValidationReport& report);

}  // namespace noma::lab
