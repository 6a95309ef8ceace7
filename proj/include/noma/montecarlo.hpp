// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The noma-lab Authors

#pragma once

#include "noma/model.hpp"
#include "noma/outage_spec.hpp"

#include <cstdint>
#include <vector>

namespace noma::mc {

/// Sample budget and seed. Realizations are split into fixed chunks; chunk c
/// draws from stream_id c, so the result depends only on (samples, seed,
/// chunk_size). `workers` only changes wall-clock time.
struct McConfig {
    std::uint64_t samples = 100'000;
    std::uint64_t seed = 1;
    std::uint64_t chunk_size = 4096;
    unsigned workers = 1;
};

struct Estimate {
    double mean = 0.0;
    double std_error = 0.0;  ///< sample stddev / sqrt(samples)
    std::uint64_t samples = 0;
};

struct PerSymbolRates {
    Estimate x1;
    Estimate x2;
    Estimate xr;
};

/// System outage plus the per-symbol outage fractions behind it.
struct OutageBreakdown {
    Estimate system;
    Estimate x1;
    Estimate x2;
    Estimate xr;
};

Estimate estimate_ergodic_sum_rate(Scheme scheme, const SystemParams& params, const McConfig& mc);

PerSymbolRates estimate_per_symbol_rates(Scheme scheme, const SystemParams& params,
                                         const McConfig& mc);

/// Fraction of realizations where NOT(s1 > w1 and s2 > w2 and s3 > wr);
/// std_error is the binomial sqrt(p(1-p)/n).
Estimate estimate_outage(Scheme scheme, const SystemParams& params, const OutageSpec& spec,
                         const McConfig& mc);

OutageBreakdown estimate_outage_breakdown(Scheme scheme, const SystemParams& params,
                                          const OutageSpec& spec, const McConfig& mc);

/// Upper end of the common-threshold search: a1/a2 for MRC (x2 has no relay
/// ceiling thanks to the direct link), min(a1/a2, b1/b2) for single-signal.
double outage_capacity_ceiling(Scheme scheme, const SystemParams& params) noexcept;

struct CapacityEstimate {
    Estimate capacity;      ///< 0.5 * log2(1 + W*)
    double threshold = 0;   ///< W*
    double outage_at_threshold = 0;
};

/// Largest common threshold W (w1 = w2 = wr = W) whose empirical outage is
/// <= epsilon, by bisection to 1e-4 relative in W. Returns 0 when even
/// W -> 0+ violates epsilon.
CapacityEstimate estimate_outage_capacity_detail(Scheme scheme, const SystemParams& params,
                                                 double epsilon, const McConfig& mc);

Estimate estimate_outage_capacity(Scheme scheme, const SystemParams& params, double epsilon,
                                  const McConfig& mc);

/// Every simulated SnrBreakdown in realization order (chunk-major).
std::vector<SnrBreakdown> simulate_snrs(Scheme scheme, const SystemParams& params,
                                        const McConfig& mc);

}  // namespace noma::mc
