// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The noma-lab Authors

#include "noma/lab/plot.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <vector>

namespace noma::lab {

namespace {

struct Column {
    std::string_view name;
    std::string_view label;
    double (*get)(const Row&);
};

// Numeric row fields that can carry a sweep, in canonical order.
const std::array<Column, 10> kColumns = {{
    {"rho_db", "Transmit SNR (dB)", [](const Row& r) { return r.rho_db; }},
    {"a1", "Power fraction a1", [](const Row& r) { return r.a1; }},
    {"b1", "Power fraction b1", [](const Row& r) { return r.b1; }},
    {"alpha_su1", "alpha_SU1", [](const Row& r) { return r.alpha_su1; }},
    {"alpha_su2", "alpha_SU2", [](const Row& r) { return r.alpha_su2; }},
    {"alpha_su3", "alpha_SU3", [](const Row& r) { return r.alpha_su3; }},
    {"alpha_ru2", "alpha_RU2", [](const Row& r) { return r.alpha_ru2; }},
    {"alpha_ru3", "alpha_RU3", [](const Row& r) { return r.alpha_ru3; }},
    {"target_rate", "Target rate (bits/s/Hz)", [](const Row& r) { return r.target_rate.value_or(NAN); }},
    {"epsilon", "Outage constraint epsilon", [](const Row& r) { return r.epsilon.value_or(NAN); }},
}};

constexpr std::array<const char*, 8> kPalette = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
                                                 "#9467bd", "#8c564b", "#e377c2", "#17becf"};

std::string fmt(double v, int prec = 2)
{
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.*f", prec, v);
    return buf;
}

std::string short_num(double v)
{
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

std::string escape(std::string_view s)
{
    std::string out;
    for (char ch : s) {
        switch (ch) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        default: out += ch;
        }
    }
    return out;
}

std::size_t distinct(const Table& t, const Column& c)
{
    std::set<double> seen;
    for (const auto& r : t.rows) {
        const double v = c.get(r);
        if (!std::isnan(v))
            seen.insert(v);
    }
    return seen.size();
}

bool varies(const Table& t, const Column& c) { return distinct(t, c) > 1; }

std::string y_label(const Table& t)
{
    std::set<std::string> metrics;
    for (const auto& r : t.rows)
        metrics.insert(r.metric);
    if (metrics.size() == 1) {
        const auto& m = *metrics.begin();
        if (m == "ergodic_sum")
            return "Ergodic sum rate (bits/s/Hz)";
        if (m == "outage")
            return "Outage probability";
        if (m == "outage_capacity")
            return "Outage capacity (bits/s/Hz)";
    }
    return "Ergodic rate (bits/s/Hz)";
}

/// Label naming a row's group: scheme, metric and the given varying fields.
std::string group_key(const Row& r, const std::vector<const Column*>& cols)
{
    std::string key = r.scheme + " " + r.metric;
    for (const auto* c : cols)
        key += " " + std::string(c->name) + "=" + short_num(c->get(r));
    return key;
}

/// Round-number axis ticks covering [lo, hi].
std::vector<double> ticks(double lo, double hi)
{
    const double span = hi - lo;
    const double raw = span / 5.0;
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    double step = mag;
    for (double m : {1.0, 2.0, 2.5, 5.0, 10.0}) {
        step = m * mag;
        if (span / step <= 6.0)
            break;
    }
    std::vector<double> out;
    for (double v = std::ceil(lo / step - 1e-9) * step; v <= hi + 1e-9 * span; v += step)
        out.push_back(std::abs(v) < 1e-12 * span ? 0.0 : v);
    return out;
}

int tick_precision(const std::vector<double>& t)
{
    if (t.size() < 2)
        return 2;
    const double step = t[1] - t[0];
    return std::clamp(static_cast<int>(std::ceil(-std::log10(step) + 1e-9)), 0, 6);
}

struct Frame {
    double left = 80, top = 50, width = 560, height = 380;
    double x0, x1, y0, y1;
    double sx(double x) const { return left + (x - x0) / (x1 - x0) * width; }
    double sy(double y) const { return top + height - (y - y0) / (y1 - y0) * height; }
};

std::string header(double w, double h, std::string_view title)
{
    std::string s = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(w, 0) + "\" height=\"" + fmt(h, 0) +
         "\" viewBox=\"0 0 " + fmt(w, 0) + " " + fmt(h, 0) + "\" font-family=\"Helvetica, Arial, sans-serif\">\n";
    s += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    if (!title.empty())
        s += "<text x=\"" + fmt(w / 2) + "\" y=\"24\" font-size=\"16\" text-anchor=\"middle\">" + escape(title) +
             "</text>\n";
    return s;
}

std::string axes(const Frame& f, const std::string& xlabel, const std::string& ylabel, bool grid = true)
{
    std::string s;
    s += "<rect x=\"" + fmt(f.left) + "\" y=\"" + fmt(f.top) + "\" width=\"" + fmt(f.width) + "\" height=\"" +
         fmt(f.height) + "\" fill=\"none\" stroke=\"black\"/>\n";
    const auto xt = ticks(f.x0, f.x1);
    const int xp = tick_precision(xt);
    for (double v : xt) {
        const double x = f.sx(v);
        s += "<line x1=\"" + fmt(x) + "\" y1=\"" + fmt(f.top + f.height) + "\" x2=\"" + fmt(x) + "\" y2=\"" +
             fmt(f.top + f.height + 5) + "\" stroke=\"black\"/>\n";
        s += "<text x=\"" + fmt(x) + "\" y=\"" + fmt(f.top + f.height + 20) +
             "\" font-size=\"12\" text-anchor=\"middle\">" + fmt(v, xp) + "</text>\n";
    }
    const auto yt = ticks(f.y0, f.y1);
    const int yp = tick_precision(yt);
    for (double v : yt) {
        const double y = f.sy(v);
        s += "<line x1=\"" + fmt(f.left - 5) + "\" y1=\"" + fmt(y) + "\" x2=\"" + fmt(grid ? f.left + f.width : f.left) +
             "\" y2=\"" + fmt(y) + "\" stroke=\"" + (grid ? "#dddddd" : "black") + "\"/>\n";
        s += "<text x=\"" + fmt(f.left - 8) + "\" y=\"" + fmt(y + 4) + "\" font-size=\"12\" text-anchor=\"end\">" +
             fmt(v, yp) + "</text>\n";
    }
    s += "<text x=\"" + fmt(f.left + f.width / 2) + "\" y=\"" + fmt(f.top + f.height + 42) +
         "\" font-size=\"14\" text-anchor=\"middle\">" + escape(xlabel) + "</text>\n";
    s += "<text transform=\"translate(" + fmt(f.left - 55) + "," + fmt(f.top + f.height / 2) +
         ") rotate(-90)\" font-size=\"14\" text-anchor=\"middle\">" + escape(ylabel) + "</text>\n";
    return s;
}

std::string render_lines(const Table& t, std::string_view title)
{
    const Column* x = nullptr;
    std::vector<const Column*> others;
    for (const auto& c : kColumns)
        if (varies(t, c))
            others.push_back(&c);
    if (others.empty())
        throw PlotError("plot: dimension mismatch, no swept field to use as the x axis");
    // The longest sweep is the x axis; rho_db wins ties.
    auto best = others.begin();
    for (auto it = others.begin(); it != others.end(); ++it)
        if (distinct(t, **it) > distinct(t, **best))
            best = it;
    x = *best;
    others.erase(best);

    struct Series {
        std::string key;
        std::vector<std::array<double, 3>> pts;  // x, mc, analytic (NaN if none)
    };
    std::vector<Series> series;
    std::map<std::string, std::size_t> index;
    double ylo = INFINITY, yhi = -INFINITY;
    for (const auto& r : t.rows) {
        const auto key = group_key(r, others);
        auto [it, inserted] = index.try_emplace(key, series.size());
        if (inserted)
            series.push_back({key, {}});
        const double mc = r.value.value_or(NAN);
        // High-SNR forms below their validity region are left out of the plot.
        const double an = r.analytic_exact ? *r.analytic_exact
                          : r.warn_low_snr ? NAN
                                           : r.analytic_approx.value_or(NAN);
        series[it->second].pts.push_back({x->get(r), mc, an});
        for (double v : {mc, an}) {
            if (std::isfinite(v)) {
                ylo = std::min(ylo, v);
                yhi = std::max(yhi, v);
            }
        }
    }
    if (!std::isfinite(ylo))
        throw PlotError("plot: no finite values to draw");
    for (auto& s : series)
        std::stable_sort(s.pts.begin(), s.pts.end(), [](const auto& a, const auto& b) { return a[0] < b[0]; });

    double xlo = INFINITY, xhi = -INFINITY;
    for (const auto& r : t.rows) {
        xlo = std::min(xlo, x->get(r));
        xhi = std::max(xhi, x->get(r));
    }
    if (yhi == ylo) {
        ylo -= 0.5;
        yhi += 0.5;
    }
    const double pad = 0.05 * (yhi - ylo);
    Frame f;
    f.x0 = xlo;
    f.x1 = xhi;
    f.y0 = ylo - pad;
    f.y1 = yhi + pad;

    const double legend_h = 18.0 * static_cast<double>(series.size()) + 30.0;
    const double height = f.top + f.height + 60 + legend_h;
    std::string s = header(720, height, title);
    s += axes(f, std::string(x->label), y_label(t));
    for (std::size_t i = 0; i < series.size(); ++i) {
        const char* color = kPalette[i % kPalette.size()];
        const auto& pts = series[i].pts;
        std::string path;
        for (const auto& p : pts) {
            if (!std::isfinite(p[2]))
                continue;
            path += (path.empty() ? "M" : " L") + fmt(f.sx(p[0])) + "," + fmt(f.sy(p[2]));
        }
        if (!path.empty())
            s += "<path d=\"" + path + "\" fill=\"none\" stroke=\"" + color + "\" stroke-width=\"1.5\"/>\n";
        for (const auto& p : pts) {
            if (!std::isfinite(p[1]))
                continue;
            s += "<circle cx=\"" + fmt(f.sx(p[0])) + "\" cy=\"" + fmt(f.sy(p[1])) + "\" r=\"3.5\" fill=\"none\" stroke=\"" +
                 color + "\"/>\n";
        }
        const double ly = f.top + f.height + 70 + 18.0 * static_cast<double>(i);
        s += "<line x1=\"" + fmt(f.left) + "\" y1=\"" + fmt(ly) + "\" x2=\"" + fmt(f.left + 24) + "\" y2=\"" +
             fmt(ly) + "\" stroke=\"" + color + "\" stroke-width=\"1.5\"/>\n";
        s += "<circle cx=\"" + fmt(f.left + 12) + "\" cy=\"" + fmt(ly) + "\" r=\"3.5\" fill=\"none\" stroke=\"" + color +
             "\"/>\n";
        s += "<text x=\"" + fmt(f.left + 32) + "\" y=\"" + fmt(ly + 4) + "\" font-size=\"12\">" +
             escape(series[i].key) + "</text>\n";
    }
    const double note_y = f.top + f.height + 70 + 18.0 * static_cast<double>(series.size());
    s += "<text x=\"" + fmt(f.left) + "\" y=\"" + fmt(note_y + 4) +
         "\" font-size=\"11\" fill=\"#555555\">markers: Monte Carlo; lines: analytic (high-SNR forms only where rho &gt;= 20 dB)</text>\n";
    s += "</svg>\n";
    return s;
}

std::string color_for(double t)
{
    // Piecewise-linear blue -> teal -> yellow ramp.
    static const std::array<std::array<double, 3>, 5> stops = {
        {{68, 1, 84}, {59, 82, 139}, {33, 145, 140}, {94, 201, 98}, {253, 231, 37}}};
    t = std::clamp(t, 0.0, 1.0) * (stops.size() - 1);
    const auto i = std::min(static_cast<std::size_t>(t), stops.size() - 2);
    const double u = t - static_cast<double>(i);
    char buf[16];
    std::snprintf(buf, sizeof buf, "#%02x%02x%02x", static_cast<int>(std::lround(stops[i][0] + u * (stops[i + 1][0] - stops[i][0]))),
                  static_cast<int>(std::lround(stops[i][1] + u * (stops[i + 1][1] - stops[i][1]))),
                  static_cast<int>(std::lround(stops[i][2] + u * (stops[i + 1][2] - stops[i][2]))));
    return buf;
}

std::string render_heatmap(const Table& t, std::string_view title)
{
    const Column& a1 = kColumns[1];
    const Column& b1 = kColumns[2];
    if (!varies(t, a1) || !varies(t, b1))
        throw PlotError("plot: dimension mismatch, a heatmap needs both a1 and b1 to vary");
    std::vector<const Column*> others;
    for (const auto& c : kColumns)
        if (&c != &a1 && &c != &b1 && varies(t, c))
            others.push_back(&c);

    std::set<double> a_vals, b_vals;
    for (const auto& r : t.rows) {
        a_vals.insert(r.a1);
        b_vals.insert(r.b1);
    }
    const std::vector<double> av(a_vals.begin(), a_vals.end());
    const std::vector<double> bv(b_vals.begin(), b_vals.end());

    struct Panel {
        std::string key;
        std::vector<double> cells;  // a-major
        std::vector<int> filled;
    };
    std::vector<Panel> panels;
    std::map<std::string, std::size_t> index;
    double lo = INFINITY, hi = -INFINITY;
    for (const auto& r : t.rows) {
        const auto key = group_key(r, others);
        auto [it, inserted] = index.try_emplace(key, panels.size());
        if (inserted)
            panels.push_back({key, std::vector<double>(av.size() * bv.size(), NAN),
                              std::vector<int>(av.size() * bv.size(), 0)});
        auto& p = panels[it->second];
        const auto ia = static_cast<std::size_t>(std::lower_bound(av.begin(), av.end(), r.a1) - av.begin());
        const auto ib = static_cast<std::size_t>(std::lower_bound(bv.begin(), bv.end(), r.b1) - bv.begin());
        const std::size_t cell = ia * bv.size() + ib;
        if (++p.filled[cell] > 1)
            throw PlotError("plot: dimension mismatch, duplicate a1/b1 cell in '" + key + "'");
        p.cells[cell] = r.value.value_or(NAN);
        if (r.value && std::isfinite(*r.value)) {
            lo = std::min(lo, *r.value);
            hi = std::max(hi, *r.value);
        }
    }
    for (const auto& p : panels)
        if (std::find(p.filled.begin(), p.filled.end(), 0) != p.filled.end())
            throw PlotError("plot: dimension mismatch, incomplete a1 x b1 grid in '" + p.key + "'");
    if (!std::isfinite(lo))
        throw PlotError("plot: no finite values to draw");
    if (hi == lo)
        hi = lo + 1.0;

    const double pw = 420, ph = 320, gap = 90, left = 80, top = 60;
    const double height = top + static_cast<double>(panels.size()) * (ph + gap) + 20;
    std::string s = header(640, height, title);
    for (std::size_t k = 0; k < panels.size(); ++k) {
        const auto& p = panels[k];
        const double py = top + static_cast<double>(k) * (ph + gap);
        Frame f;
        f.left = left;
        f.top = py;
        f.width = pw;
        f.height = ph;
        // Cell edges halfway between grid values.
        const double da = av.size() > 1 ? (av.back() - av.front()) / static_cast<double>(av.size() - 1) : 1.0;
        const double db = bv.size() > 1 ? (bv.back() - bv.front()) / static_cast<double>(bv.size() - 1) : 1.0;
        f.x0 = av.front() - da / 2;
        f.x1 = av.back() + da / 2;
        f.y0 = bv.front() - db / 2;
        f.y1 = bv.back() + db / 2;
        for (std::size_t ia = 0; ia < av.size(); ++ia) {
            for (std::size_t ib = 0; ib < bv.size(); ++ib) {
                const double v = p.cells[ia * bv.size() + ib];
                const double xa = ia == 0 ? f.x0 : (av[ia - 1] + av[ia]) / 2;
                const double xb = ia + 1 == av.size() ? f.x1 : (av[ia] + av[ia + 1]) / 2;
                const double ya = ib == 0 ? f.y0 : (bv[ib - 1] + bv[ib]) / 2;
                const double yb = ib + 1 == bv.size() ? f.y1 : (bv[ib] + bv[ib + 1]) / 2;
                const std::string fill = std::isfinite(v) ? color_for((v - lo) / (hi - lo)) : "#cccccc";
                s += "<rect x=\"" + fmt(f.sx(xa)) + "\" y=\"" + fmt(f.sy(yb)) + "\" width=\"" +
                     fmt(f.sx(xb) - f.sx(xa)) + "\" height=\"" + fmt(f.sy(ya) - f.sy(yb)) + "\" fill=\"" + fill +
                     "\" shape-rendering=\"crispEdges\"><title>a1=" + short_num(av[ia]) + " b1=" + short_num(bv[ib]) + " value=" +
                     short_num(v) + "</title></rect>\n";
            }
        }
        s += axes(f, "Power fraction a1", "Power fraction b1", false);
        s += "<text x=\"" + fmt(left + pw / 2) + "\" y=\"" + fmt(py - 8) + "\" font-size=\"13\" text-anchor=\"middle\">" +
             escape(p.key) + "</text>\n";
    }
    // Shared color bar.
    const double cx = left + pw + 40, cy = top, ch = ph;
    for (int i = 0; i < 50; ++i) {
        const double t0 = static_cast<double>(i) / 50.0;
        s += "<rect x=\"" + fmt(cx) + "\" y=\"" + fmt(cy + ch * (1.0 - t0 - 0.02)) + "\" width=\"18\" height=\"" +
             fmt(ch * 0.02 + 0.5) + "\" fill=\"" + color_for(t0 + 0.01) + "\"/>\n";
    }
    s += "<text x=\"" + fmt(cx + 24) + "\" y=\"" + fmt(cy + 10) + "\" font-size=\"12\">" + short_num(hi) + "</text>\n";
    s += "<text x=\"" + fmt(cx + 24) + "\" y=\"" + fmt(cy + ch) + "\" font-size=\"12\">" + short_num(lo) + "</text>\n";
    s += "<text transform=\"translate(" + fmt(cx + 70) + "," + fmt(cy + ch / 2) +
         ") rotate(-90)\" font-size=\"13\" text-anchor=\"middle\">" + escape(y_label(t)) + "</text>\n";
    s += "</svg>\n";
    return s;
}

}  // namespace

std::string_view to_string(PlotKind k) noexcept { return k == PlotKind::Lines ? "lines" : "heatmap"; }

std::optional<PlotKind> parse_plot_kind(std::string_view text) noexcept
{
    if (text == "lines")
        return PlotKind::Lines;
    if (text == "heatmap" || text == "surface")
        return PlotKind::Heatmap;
    return std::nullopt;
}

PlotKind default_plot_kind(const Table& table)
{
    // Zipped a1/b1 pairs vary together but do not span a grid.
    std::set<double> a, b;
    std::set<std::pair<double, double>> pairs;
    for (const auto& r : table.rows) {
        a.insert(r.a1);
        b.insert(r.b1);
        pairs.emplace(r.a1, r.b1);
    }
    const bool grid = a.size() > 1 && b.size() > 1 && pairs.size() == a.size() * b.size();
    return grid ? PlotKind::Heatmap : PlotKind::Lines;
}

std::string render_svg(const Table& table, PlotKind kind, std::string_view title)
{
    if (table.rows.empty())
        throw PlotError("plot: empty table");
    return kind == PlotKind::Lines ? render_lines(table, title) : render_heatmap(table, title);
}

void emit_plot(const Table& table, PlotKind kind, const std::filesystem::path& path, std::string_view title)
{
    const auto svg = render_svg(table, kind, title);
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot open '" + path.string() + "' for writing");
    out << svg;
    if (!out)
        throw std::runtime_error("failed writing '" + path.string() + "'");
}

}  // namespace noma::lab
