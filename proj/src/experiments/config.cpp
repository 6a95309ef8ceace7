// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The noma-lab Authors

#include "noma/lab/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <set>
#include <sstream>

namespace noma::lab {

namespace {

constexpr std::array<std::string_view, kFieldCount> kFieldNames = {
    "a1", "b1", "alpha_su1", "alpha_su2", "alpha_su3", "alpha_ru2", "alpha_ru3",
    "target_rate", "epsilon", "rho_db"};

std::string_view trim(std::string_view s)
{
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos)
        return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep)
{
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(sep, start);
        out.push_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
        if (pos == std::string_view::npos)
            break;
        start = pos + 1;
    }
    return out;
}

std::string format_double(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    // Prefer the shortest representation that still round-trips.
    for (int prec = 1; prec <= 17; ++prec) {
        char shorter[64];
        std::snprintf(shorter, sizeof shorter, "%.*g", prec, v);
        if (std::strtod(shorter, nullptr) == v)
            return shorter;
    }
    return buf;
}

double parse_number(std::string_view text, int line, std::string_view key)
{
    const std::string s(trim(text));
    if (s.empty())
        throw ConfigError(line, std::string(key), "missing number");
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (end != s.c_str() + s.size() || !std::isfinite(v))
        throw ConfigError(line, std::string(key), "not a finite number: '" + s + "'");
    return v;
}

std::uint64_t parse_unsigned(std::string_view text, int line, std::string_view key)
{
    std::uint64_t v = 0;
    const auto s = trim(text);
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size())
        throw ConfigError(line, std::string(key), "not an unsigned integer: '" + std::string(s) + "'");
    return v;
}

/// Items of a `[a, b, c]` list, or the single bare item.
std::vector<std::string_view> list_items(std::string_view value, int line, std::string_view key)
{
    if (!value.empty() && value.front() == '[') {
        if (value.back() != ']')
            throw ConfigError(line, std::string(key), "unterminated list");
        const auto inner = trim(value.substr(1, value.size() - 2));
        if (inner.empty())
            return {};
        return split(inner, ',');
    }
    return {value};
}

Axis parse_axis(std::string_view value, int line, std::string_view key)
{
    if (value.find(':') != std::string_view::npos && value.front() != '[') {
        const auto parts = split(value, ':');
        if (parts.size() != 3)
            throw ConfigError(line, std::string(key), "range must be start:stop:step");
        Range r{parse_number(parts[0], line, key), parse_number(parts[1], line, key),
                parse_number(parts[2], line, key)};
        if (!(r.step > 0.0))
            throw ConfigError(line, std::string(key), "range step must be > 0");
        if (r.stop < r.start)
            throw ConfigError(line, std::string(key), "empty range (stop < start)");
        return {r};
    }
    std::vector<double> values;
    for (auto item : list_items(value, line, key))
        values.push_back(parse_number(item, line, key));
    if (values.empty())
        throw ConfigError(line, std::string(key), "empty list");
    return {values};
}

std::string echo_axis(const Axis& axis)
{
    if (const auto* r = std::get_if<Range>(&axis.spec))
        return format_double(r->start) + ":" + format_double(r->stop) + ":" + format_double(r->step);
    const auto& list = std::get<std::vector<double>>(axis.spec);
    if (list.size() == 1)
        return format_double(list.front());
    std::string s = "[";
    for (std::size_t i = 0; i < list.size(); ++i) {
        if (i)
            s += ", ";
        s += format_double(list[i]);
    }
    return s + "]";
}

}  // namespace

ConfigError::ConfigError(int line, std::string field, const std::string& message)
    : std::runtime_error([&] {
          std::string s = "config";
          if (line > 0)
              s += " line " + std::to_string(line);
          if (!field.empty())
              s += " field '" + field + "'";
          return s + ": " + message;
      }()),
      line_(line),
      field_(std::move(field))
{
}

std::string_view to_string(Metric m) noexcept
{
    switch (m) {
    case Metric::ErgodicSum: return "ergodic_sum";
    case Metric::PerSymbolRates: return "per_symbol_rates";
    case Metric::Outage: return "outage";
    case Metric::OutageCapacity: return "outage_capacity";
    }
    return "?";
}

std::optional<Metric> parse_metric(std::string_view text) noexcept
{
    for (Metric m : {Metric::ErgodicSum, Metric::PerSymbolRates, Metric::Outage, Metric::OutageCapacity})
        if (to_string(m) == text)
            return m;
    return std::nullopt;
}

std::vector<double> Axis::values() const
{
    if (const auto* r = std::get_if<Range>(&spec)) {
        // Tolerate rounding in (stop - start) / step so 0:40:5 includes 40.
        const auto n = static_cast<std::size_t>(std::floor((r->stop - r->start) / r->step + 1e-9)) + 1;
        std::vector<double> v(n);
        for (std::size_t i = 0; i < n; ++i)
            v[i] = r->start + static_cast<double>(i) * r->step;
        return v;
    }
    return std::get<std::vector<double>>(spec);
}

bool Axis::is_set() const
{
    const auto* list = std::get_if<std::vector<double>>(&spec);
    return !list || !list->empty();
}

std::string_view field_name(Field f) noexcept { return kFieldNames[static_cast<std::size_t>(f)]; }

std::optional<Field> parse_field(std::string_view name) noexcept
{
    for (std::size_t i = 0; i < kFieldCount; ++i)
        if (kFieldNames[i] == name)
            return static_cast<Field>(i);
    return std::nullopt;
}

int SourceLines::of(std::string_view key) const
{
    const auto it = line.find(std::string(key));
    return it == line.end() ? 0 : it->second;
}

ExperimentConfig parse_config(std::string_view text)
{
    ExperimentConfig c;
    std::set<std::string> seen;
    std::istringstream in{std::string(text)};
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string_view line(raw);
        if (const auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (line.empty())
            continue;
        const auto eq = line.find('=');
        if (eq == std::string_view::npos)
            throw ConfigError(line_no, "", "expected 'key = value'");
        const std::string key(trim(line.substr(0, eq)));
        const auto value = trim(line.substr(eq + 1));
        if (key.empty())
            throw ConfigError(line_no, "", "missing key");
        if (key != "zip" && !seen.insert(key).second)
            throw ConfigError(line_no, key, "duplicate key (first on line " + std::to_string(c.lines.of(key)) + ")");
        if (!c.lines.line.count(key))
            c.lines.line[key] = line_no;

        if (key == "title") {
            c.title = std::string(value);
        } else if (key == "scheme") {
            c.schemes.clear();
            for (auto item : list_items(value, line_no, key)) {
                const auto s = parse_scheme(item);
                if (!s)
                    throw ConfigError(line_no, key, "unknown scheme '" + std::string(item) + "' (single, mrc)");
                c.schemes.push_back(*s);
            }
            if (c.schemes.empty())
                throw ConfigError(line_no, key, "empty list");
        } else if (key == "metric") {
            const auto m = parse_metric(value);
            if (!m)
                throw ConfigError(line_no, key,
                                  "unknown metric '" + std::string(value) +
                                      "' (ergodic_sum, per_symbol_rates, outage, outage_capacity)");
            c.metric = *m;
        } else if (key == "threshold_convention") {
            const auto t = parse_threshold_convention(value);
            if (!t)
                throw ConfigError(line_no, key, "unknown convention '" + std::string(value) + "' (two_phase, literal)");
            c.convention = *t;
        } else if (key == "samples") {
            c.samples = parse_unsigned(value, line_no, key);
            if (c.samples == 0)
                throw ConfigError(line_no, key, "must be >= 1");
        } else if (key == "seed") {
            c.seed = parse_unsigned(value, line_no, key);
        } else if (key == "chunk_size") {
            c.chunk_size = parse_unsigned(value, line_no, key);
            if (c.chunk_size == 0)
                throw ConfigError(line_no, key, "must be >= 1");
        } else if (key == "zip") {
            std::vector<Field> group;
            for (auto name : split(value, ',')) {
                const auto f = parse_field(name);
                if (!f)
                    throw ConfigError(line_no, key, "unknown field '" + std::string(name) + "'");
                group.push_back(*f);
            }
            if (group.size() < 2)
                throw ConfigError(line_no, key, "needs at least two fields");
            c.zips.push_back(group);
        } else if (const auto f = parse_field(key)) {
            c.axis(*f) = parse_axis(value, line_no, key);
        } else {
            throw ConfigError(line_no, key, "unknown key");
        }
    }
    return c;
}

std::string echo_config(const ExperimentConfig& c)
{
    std::string out;
    auto put = [&](std::string_view key, const std::string& value) {
        out += std::string(key) + " = " + value + "\n";
    };
    if (!c.title.empty())
        put("title", c.title);
    std::string schemes;
    for (std::size_t i = 0; i < c.schemes.size(); ++i)
        schemes += (i ? ", " : "") + std::string(to_string(c.schemes[i]));
    put("scheme", c.schemes.size() == 1 ? schemes : "[" + schemes + "]");
    put("metric", std::string(to_string(c.metric)));
    for (std::size_t i = 0; i < kFieldCount; ++i)
        if (c.axes[i].is_set())
            put(kFieldNames[i], echo_axis(c.axes[i]));
    for (const auto& group : c.zips) {
        std::string names;
        for (std::size_t i = 0; i < group.size(); ++i)
            names += (i ? ", " : "") + std::string(field_name(group[i]));
        put("zip", names);
    }
    put("threshold_convention", std::string(to_string(c.convention)));
    put("samples", std::to_string(c.samples));
    put("seed", std::to_string(c.seed));
    put("chunk_size", std::to_string(c.chunk_size));
    return out;
}

std::vector<SweepPoint> expand(const ExperimentConfig& c)
{
    auto fail = [&](std::string_view key, const std::string& msg) -> ConfigError {
        return ConfigError(c.lines.of(key), std::string(key), msg);
    };

    for (Field f : {Field::A1, Field::B1, Field::AlphaSu1, Field::AlphaSu2, Field::AlphaSu3, Field::AlphaRu2,
                    Field::AlphaRu3, Field::RhoDb})
        if (!c.axis(f).is_set())
            throw fail(field_name(f), "required field is missing");
    const bool needs_rate = c.metric == Metric::Outage;
    const bool needs_eps = c.metric == Metric::OutageCapacity;
    if (needs_rate != c.axis(Field::TargetRate).is_set())
        throw fail("target_rate", needs_rate ? "required for metric outage" : "only applies to metric outage");
    if (needs_eps != c.axis(Field::Epsilon).is_set())
        throw fail("epsilon", needs_eps ? "required for metric outage_capacity"
                                        : "only applies to metric outage_capacity");

    std::array<std::vector<double>, kFieldCount> values;
    for (std::size_t i = 0; i < kFieldCount; ++i) {
        if (!c.axes[i].is_set())
            continue;
        values[i] = c.axes[i].values();
        if (values[i].empty())
            throw fail(kFieldNames[i], "empty sweep");
    }

    // Sweep dimensions: each zip group is one dimension, every other set
    // field its own. Ordered by the canonical position of their first field.
    std::array<int, kFieldCount> group_of;
    group_of.fill(-1);
    std::vector<std::vector<std::size_t>> dims;
    for (const auto& zip : c.zips) {
        std::vector<std::size_t> dim;
        for (Field f : zip) {
            const auto i = static_cast<std::size_t>(f);
            if (!c.axes[i].is_set())
                throw fail("zip", "field '" + std::string(kFieldNames[i]) + "' is not set");
            if (group_of[i] != -1)
                throw fail("zip", "field '" + std::string(kFieldNames[i]) + "' is zipped twice");
            if (values[i].size() != values[static_cast<std::size_t>(zip.front())].size())
                throw fail("zip", "zipped fields need lists of equal length");
            group_of[i] = static_cast<int>(dims.size());
            dim.push_back(i);
        }
        std::sort(dim.begin(), dim.end());
        dims.push_back(dim);
    }
    for (std::size_t i = 0; i < kFieldCount; ++i)
        if (c.axes[i].is_set() && group_of[i] == -1)
            dims.push_back({i});
    std::sort(dims.begin(), dims.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });

    // Per-field range checks, reported against the field's line.
    for (std::size_t i = 0; i < kFieldCount; ++i) {
        for (double v : values[i]) {
            const auto f = static_cast<Field>(i);
            const auto name = kFieldNames[i];
            if (f == Field::A1 && !(v > 0.5 && v < 1.0))
                throw fail(name, "value " + format_double(v) + " outside (0.5, 1)");
            if (f == Field::B1 && !(v > 0.0 && v < 1.0))
                throw fail(name, "value " + format_double(v) + " outside (0, 1)");
            if (f == Field::Epsilon && !(v > 0.0 && v < 1.0))
                throw fail(name, "value " + format_double(v) + " outside (0, 1)");
            if ((f == Field::TargetRate || (f >= Field::AlphaSu1 && f <= Field::AlphaRu3)) && !(v > 0.0))
                throw fail(name, "value " + format_double(v) + " must be > 0");
        }
    }

    std::vector<SweepPoint> points;
    for (Scheme scheme : c.schemes) {
        std::vector<std::size_t> idx(dims.size(), 0);
        bool done = false;
        while (!done) {
            std::array<double, kFieldCount> v{};
            for (std::size_t d = 0; d < dims.size(); ++d)
                for (std::size_t f : dims[d])
                    v[f] = values[f][idx[d]];
            auto at = [&](Field f) { return v[static_cast<std::size_t>(f)]; };
            SweepPoint p;
            p.scheme = scheme;
            p.a1 = at(Field::A1);
            p.b1 = at(Field::B1);
            p.rho_db = at(Field::RhoDb);
            p.alpha = {at(Field::AlphaSu1), at(Field::AlphaSu2), at(Field::AlphaSu3), at(Field::AlphaRu2),
                       at(Field::AlphaRu3)};
            if (needs_rate)
                p.target_rate = at(Field::TargetRate);
            if (needs_eps)
                p.epsilon = at(Field::Epsilon);
            points.push_back(p);

            // Odometer step, last dimension fastest.
            std::size_t d = dims.size();
            while (true) {
                if (d == 0) {
                    done = true;
                    break;
                }
                --d;
                if (++idx[d] < values[dims[d].front()].size())
                    break;
                idx[d] = 0;
            }
        }
    }
    if (points.empty())
        throw ConfigError(0, "", "empty sweep");
    return points;
}

mc::McConfig mc_config(const ExperimentConfig& c, unsigned workers)
{
    mc::McConfig m;
    m.samples = c.samples;
    m.seed = c.seed;
    m.chunk_size = c.chunk_size;
    m.workers = std::max(1u, workers);
    return m;
}

}  // namespace noma::lab
