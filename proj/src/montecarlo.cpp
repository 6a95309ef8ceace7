// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The noma-lab Authors

#include "noma/montecarlo.hpp"

#include "noma/channel.hpp"
#include "noma/kernels.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <thread>

namespace noma::mc {

namespace {

/// Per-thread buffers for one chunk.
struct ChunkWorkspace {
    explicit ChunkWorkspace(std::size_t n)
        : uniforms(5, std::vector<double>(n)), s1(n), s2(n), s3(n), r1(n), r2(n), r3(n)
    {
    }
    std::vector<std::vector<double>> uniforms;
    std::vector<double> s1, s2, s3;
    std::vector<double> r1, r2, r3;
};

struct ChunkView {
    std::span<const double> s1, s2, s3;
    ChunkWorkspace* ws;
};

void validate(const McConfig& mc)
{
    if (mc.samples < 1)
        throw std::invalid_argument("McConfig: samples must be >= 1");
    if (mc.chunk_size < 1)
        throw std::invalid_argument("McConfig: chunk_size must be >= 1");
}

/// Runs `body(chunk, view)` for every chunk and returns the results in chunk
/// order. Chunks are claimed dynamically by the workers but every result is
/// a function of its chunk alone.
template <class Result>
std::vector<Result> map_chunks(Scheme scheme, const SystemParams& params, const McConfig& mc,
                               const std::function<Result(std::uint64_t, const ChunkView&)>& body)
{
    validate(mc);
    const std::uint64_t n_chunks = (mc.samples + mc.chunk_size - 1) / mc.chunk_size;
    std::vector<Result> results(n_chunks);
    std::atomic<std::uint64_t> next{0};

    auto work = [&] {
        ChunkWorkspace ws(static_cast<std::size_t>(std::min(mc.chunk_size, mc.samples)));
        for (std::uint64_t c = next++; c < n_chunks; c = next++) {
            const std::uint64_t begin = c * mc.chunk_size;
            const auto n = static_cast<std::size_t>(std::min(mc.chunk_size, mc.samples - begin));
            std::array<std::span<double>, 5> fields;
            kernels::UniformBlock block;
            for (std::size_t f = 0; f < 5; ++f) {
                fields[f] = std::span<double>(ws.uniforms[f]).first(n);
                block.field[f] = fields[f];
            }
            channel::fill_realization_uniforms({mc.seed, c}, 0, fields);
            kernels::SnrBlock out{std::span<double>(ws.s1).first(n), std::span<double>(ws.s2).first(n),
                                  std::span<double>(ws.s3).first(n)};
            kernels::snr_from_uniforms(scheme, params, block, out);
            results[c] = body(c, ChunkView{out.s1, out.s2, out.s3, &ws});
        }
    };

    const unsigned workers =
        static_cast<unsigned>(std::clamp<std::uint64_t>(mc.workers, 1, n_chunks));
    if (workers == 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back(work);
    }
    return results;
}

/// Count, sum and centred second moment of one chunk; merged in chunk order.
struct Moments {
    std::uint64_t n = 0;
    double sum = 0.0;
    double m2 = 0.0;

    static Moments of(std::span<const double> x)
    {
        Moments m;
        m.n = x.size();
        for (double v : x)
            m.sum += v;
        const double mean = m.sum / static_cast<double>(m.n);
        for (double v : x)
            m.m2 += (v - mean) * (v - mean);
        return m;
    }

    void merge(const Moments& o)
    {
        if (o.n == 0)
            return;
        if (n == 0) {
            *this = o;
            return;
        }
        const double na = static_cast<double>(n);
        const double nb = static_cast<double>(o.n);
        const double delta = o.sum / nb - sum / na;
        m2 += o.m2 + delta * delta * na * nb / (na + nb);
        sum += o.sum;
        n += o.n;
    }

    Estimate estimate() const
    {
        Estimate e;
        e.samples = n;
        e.mean = sum / static_cast<double>(n);
        e.std_error = n > 1 ? std::sqrt(m2 / static_cast<double>(n - 1)) / std::sqrt(static_cast<double>(n)) : 0.0;
        return e;
    }
};

Estimate binomial(std::uint64_t hits, std::uint64_t n)
{
    const double p = static_cast<double>(hits) / static_cast<double>(n);
    return {p, std::sqrt(p * (1.0 - p) / static_cast<double>(n)), n};
}

struct RateMoments {
    Moments x1, x2, xr, sum;
};

RateMoments rate_moments(Scheme scheme, const SystemParams& params, const McConfig& mc)
{
    auto chunks = map_chunks<RateMoments>(
        scheme, params, mc, [](std::uint64_t, const ChunkView& v) {
            auto& ws = *v.ws;
            const std::size_t n = v.s1.size();
            auto r1 = std::span<double>(ws.r1).first(n);
            auto r2 = std::span<double>(ws.r2).first(n);
            auto r3 = std::span<double>(ws.r3).first(n);
            kernels::half_rates(v.s1, r1);
            kernels::half_rates(v.s2, r2);
            kernels::half_rates(v.s3, r3);
            RateMoments m;
            m.x1 = Moments::of(r1);
            m.x2 = Moments::of(r2);
            m.xr = Moments::of(r3);
            // r1 is no longer needed; reuse it for the per-realization sum.
            for (std::size_t i = 0; i < n; ++i)
                r1[i] = (r1[i] + r2[i]) + r3[i];
            m.sum = Moments::of(r1);
            return m;
        });
    RateMoments total;
    for (const auto& c : chunks) {
        total.x1.merge(c.x1);
        total.x2.merge(c.x2);
        total.xr.merge(c.xr);
        total.sum.merge(c.sum);
    }
    return total;
}

struct OutageCounts {
    std::uint64_t n = 0, system = 0, x1 = 0, x2 = 0, xr = 0;
};

}  // namespace

Estimate estimate_ergodic_sum_rate(Scheme scheme, const SystemParams& params, const McConfig& mc)
{
    return rate_moments(scheme, params, mc).sum.estimate();
}

PerSymbolRates estimate_per_symbol_rates(Scheme scheme, const SystemParams& params, const McConfig& mc)
{
    const auto m = rate_moments(scheme, params, mc);
    return {m.x1.estimate(), m.x2.estimate(), m.xr.estimate()};
}

OutageBreakdown estimate_outage_breakdown(Scheme scheme, const SystemParams& params,
                                          const OutageSpec& spec, const McConfig& mc)
{
    const double w1 = spec.w1(), w2 = spec.w2(), wr = spec.wr();
    auto chunks = map_chunks<OutageCounts>(
        scheme, params, mc, [=](std::uint64_t, const ChunkView& v) {
            OutageCounts c;
            c.n = v.s1.size();
            for (std::size_t i = 0; i < c.n; ++i) {
                const bool ok1 = v.s1[i] > w1;
                const bool ok2 = v.s2[i] > w2;
                const bool ok3 = v.s3[i] > wr;
                c.x1 += !ok1;
                c.x2 += !ok2;
                c.xr += !ok3;
                c.system += !(ok1 && ok2 && ok3);
            }
            return c;
        });
    OutageCounts t;
    for (const auto& c : chunks) {
        t.n += c.n;
        t.system += c.system;
        t.x1 += c.x1;
        t.x2 += c.x2;
        t.xr += c.xr;
    }
    return {binomial(t.system, t.n), binomial(t.x1, t.n), binomial(t.x2, t.n), binomial(t.xr, t.n)};
}

Estimate estimate_outage(Scheme scheme, const SystemParams& params, const OutageSpec& spec,
                         const McConfig& mc)
{
    return estimate_outage_breakdown(scheme, params, spec, mc).system;
}

double outage_capacity_ceiling(Scheme scheme, const SystemParams& params) noexcept
{
    if (scheme == Scheme::Mrc)
        return params.x1_ceiling();
    return std::min(params.x1_ceiling(), params.x2_relay_ceiling());
}

CapacityEstimate estimate_outage_capacity_detail(Scheme scheme, const SystemParams& params,
                                                 double epsilon, const McConfig& mc)
{
    if (!(epsilon > 0.0 && epsilon < 1.0))
        throw std::invalid_argument("outage capacity: epsilon must lie in (0, 1)");

    // With a common threshold W a realization succeeds iff W < min(s1, s2, s3),
    // so the empirical outage at W is the fraction of minima <= W.
    auto chunks = map_chunks<std::vector<double>>(
        scheme, params, mc, [](std::uint64_t, const ChunkView& v) {
            std::vector<double> m(v.s1.size());
            for (std::size_t i = 0; i < m.size(); ++i)
                m[i] = std::min(std::min(v.s1[i], v.s2[i]), v.s3[i]);
            return m;
        });
    std::vector<double> minima;
    minima.reserve(mc.samples);
    for (const auto& c : chunks)
        minima.insert(minima.end(), c.begin(), c.end());
    std::sort(minima.begin(), minima.end());

    const auto n = static_cast<double>(minima.size());
    auto outage_at = [&](double w) {
        return static_cast<double>(std::upper_bound(minima.begin(), minima.end(), w) - minima.begin()) / n;
    };

    CapacityEstimate out;
    out.capacity.samples = minima.size();
    double lo = 1e-9;
    double hi = outage_capacity_ceiling(scheme, params) - 1e-9;
    if (outage_at(lo) > epsilon) {
        out.outage_at_threshold = outage_at(lo);
        return out;
    }
    if (outage_at(hi) <= epsilon) {
        lo = hi;
    } else {
        while (hi - lo > 1e-4 * lo) {
            const double mid = 0.5 * (lo + hi);
            if (outage_at(mid) <= epsilon)
                lo = mid;
            else
                hi = mid;
        }
    }
    out.threshold = lo;
    out.outage_at_threshold = outage_at(lo);
    out.capacity.mean = 0.5 * std::log2(1.0 + lo);

    // Delta method on the epsilon-quantile of the minima, with the
    // Siddiqui-Bloch-Gastwirth density estimate from order statistics.
    const auto size = static_cast<std::ptrdiff_t>(minima.size());
    const auto d = static_cast<std::ptrdiff_t>(std::ceil(std::sqrt(n)));
    const auto k = static_cast<std::ptrdiff_t>(std::floor(epsilon * n));
    const auto lo_idx = std::clamp<std::ptrdiff_t>(k - d, 0, size - 1);
    const auto hi_idx = std::clamp<std::ptrdiff_t>(k + d, 0, size - 1);
    const double spread = minima[hi_idx] - minima[lo_idx];
    if (spread > 0.0 && hi_idx > lo_idx) {
        const double density = static_cast<double>(hi_idx - lo_idx) / (n * spread);
        const double se_w = std::sqrt(epsilon * (1.0 - epsilon) / n) / density;
        out.capacity.std_error = se_w / (2.0 * std::log(2.0) * (1.0 + lo));
    }
    return out;
}

Estimate estimate_outage_capacity(Scheme scheme, const SystemParams& params, double epsilon,
                                  const McConfig& mc)
{
    return estimate_outage_capacity_detail(scheme, params, epsilon, mc).capacity;
}

std::vector<SnrBreakdown> simulate_snrs(Scheme scheme, const SystemParams& params, const McConfig& mc)
{
    auto chunks = map_chunks<std::vector<SnrBreakdown>>(
        scheme, params, mc, [](std::uint64_t, const ChunkView& v) {
            std::vector<SnrBreakdown> out(v.s1.size());
            for (std::size_t i = 0; i < out.size(); ++i)
                out[i] = {v.s1[i], v.s2[i], v.s3[i]};
            return out;
        });
    std::vector<SnrBreakdown> all;
    all.reserve(mc.samples);
    for (const auto& c : chunks)
        all.insert(all.end(), c.begin(), c.end());
    return all;
}

}  // namespace noma::mc
