// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The noma-lab Authors

#include "noma/lab/table.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <istream>
#include <ostream>

namespace noma::lab {

namespace {

std::string num(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string opt(const std::optional<double>& v) { return v ? num(*v) : std::string(); }

// Error texts are free-form; keep them on one CSV cell.
std::string quote(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string q = "\"";
    for (char ch : s) {
        if (ch == '"')
            q += '"';
        q += ch == '\n' ? ' ' : ch;
    }
    return q + "\"";
}

std::vector<std::string> split_csv_line(const std::string& line)
{
    std::vector<std::string> cells(1);
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char ch = line[i];
        if (quoted) {
            if (ch == '"' && i + 1 < line.size() && line[i + 1] == '"') {
                cells.back() += '"';
                ++i;
            } else if (ch == '"') {
                quoted = false;
            } else {
                cells.back() += ch;
            }
        } else if (ch == '"') {
            quoted = true;
        } else if (ch == ',') {
            cells.emplace_back();
        } else if (ch != '\r') {
            cells.back() += ch;
        }
    }
    return cells;
}

double to_double(const std::string& s, std::size_t line, const std::string& column)
{
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (s.empty() || end != s.c_str() + s.size())
        throw CsvError("csv line " + std::to_string(line) + ": column '" + column + "' is not a number");
    return v;
}

}  // namespace

const std::vector<std::string>& csv_columns()
{
    static const std::vector<std::string> cols = {
        "scheme", "metric", "rho_db", "a1", "b1", "alpha_su1", "alpha_su2", "alpha_su3", "alpha_ru2",
        "alpha_ru3", "value", "std_error", "analytic_exact", "analytic_approx", "warn_low_snr", "error",
        "target_rate", "epsilon"};
    return cols;
}

void write_csv(std::ostream& out, const Table& table)
{
    const auto& cols = csv_columns();
    for (std::size_t i = 0; i < cols.size(); ++i)
        out << (i ? "," : "") << cols[i];
    out << '\n';
    for (const auto& r : table.rows) {
        out << r.scheme << ',' << r.metric << ',' << num(r.rho_db) << ',' << num(r.a1) << ',' << num(r.b1) << ','
            << num(r.alpha_su1) << ',' << num(r.alpha_su2) << ',' << num(r.alpha_su3) << ',' << num(r.alpha_ru2)
            << ',' << num(r.alpha_ru3) << ',' << opt(r.value) << ',' << opt(r.std_error) << ','
            << opt(r.analytic_exact) << ',' << opt(r.analytic_approx) << ',' << (r.warn_low_snr ? 1 : 0) << ','
            << quote(r.error) << ',' << opt(r.target_rate) << ',' << opt(r.epsilon) << '\n';
    }
}

Table read_csv(std::istream& in)
{
    std::string line;
    if (!std::getline(in, line))
        throw CsvError("csv: missing header");
    const auto header = split_csv_line(line);
    if (header != csv_columns())
        throw CsvError("csv: header does not match the expected columns");
    Table t;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line == "\r")
            continue;
        const auto c = split_csv_line(line);
        if (c.size() != header.size())
            throw CsvError("csv line " + std::to_string(line_no) + ": expected " + std::to_string(header.size()) +
                           " cells, got " + std::to_string(c.size()));
        auto req = [&](std::size_t i) { return to_double(c[i], line_no, header[i]); };
        auto optional = [&](std::size_t i) -> std::optional<double> {
            if (c[i].empty())
                return std::nullopt;
            return req(i);
        };
        Row r;
        r.scheme = c[0];
        r.metric = c[1];
        r.rho_db = req(2);
        r.a1 = req(3);
        r.b1 = req(4);
        r.alpha_su1 = req(5);
        r.alpha_su2 = req(6);
        r.alpha_su3 = req(7);
        r.alpha_ru2 = req(8);
        r.alpha_ru3 = req(9);
        r.value = optional(10);
        r.std_error = optional(11);
        r.analytic_exact = optional(12);
        r.analytic_approx = optional(13);
        r.warn_low_snr = c[14] == "1";
        r.error = c[15];
        r.target_rate = optional(16);
        r.epsilon = optional(17);
        t.rows.push_back(std::move(r));
    }
    return t;
}

}  // namespace noma::lab
