// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The noma-lab Authors

#include "noma/quadrature.hpp"

#include <cmath>
#include <queue>
#include <vector>

namespace noma::quadrature {

namespace {

// QUADPACK qk15 nodes and weights.
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
    double a, b, value, error;
    bool operator<(const Segment& o) const { return error < o.error; }
};

Segment gk15(const std::function<double(double)>& f, double a, double b)
{
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double fc = f(center);
    double kronrod = fc * kWgk[7];
    double gauss = fc * kWg[3];
    for (int j = 0; j < 7; ++j) {
        const double dx = half * kXgk[j];
        const double sum = f(center - dx) + f(center + dx);
        kronrod += kWgk[j] * sum;
        if (j % 2 == 1)
            gauss += kWg[j / 2] * sum;
    }
    const double value = kronrod * half;
    const double error = std::abs((kronrod - gauss) * half);
    if (!std::isfinite(value))
        throw QuadratureError("quadrature: integrand is not finite on the interval");
    return {a, b, value, error};
}

}  // namespace

Result integrate(const std::function<double(double)>& f, double a, double b, const Options& options)
{
    if (!(std::isfinite(a) && std::isfinite(b)))
        throw std::invalid_argument("quadrature: bounds must be finite");
    if (a == b)
        return {};

    std::priority_queue<Segment> heap;
    heap.push(gk15(f, a, b));
    Result r;
    r.evaluations = 15;
    double value = heap.top().value;
    double error = heap.top().error;

    while (error > options.abs_tol) {
        if (r.evaluations + 30 > options.max_evaluations) {
            throw QuadratureError("quadrature: tolerance " + std::to_string(options.abs_tol) +
                                  " not reached within " + std::to_string(options.max_evaluations) +
                                  " evaluations (estimate " + std::to_string(error) + ")");
        }
        const Segment worst = heap.top();
        heap.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (!(mid > worst.a && mid < worst.b))
            throw QuadratureError("quadrature: interval cannot be subdivided further");
        const Segment left = gk15(f, worst.a, mid);
        const Segment right = gk15(f, mid, worst.b);
        r.evaluations += 30;
        value += left.value + right.value - worst.value;
        error += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
    }

    // Re-sum to avoid drift from the incremental updates.
    value = 0.0;
    error = 0.0;
    std::vector<Segment> segments;
    segments.reserve(heap.size());
    while (!heap.empty()) {
        segments.push_back(heap.top());
        heap.pop();
    }
    for (auto it = segments.rbegin(); it != segments.rend(); ++it) {
        value += it->value;
        error += it->error;
    }
    r.value = value;
    r.abs_error = error;
    return r;
}

}  // namespace noma::quadrature
