// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The noma-lab Authors

#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace noma::lab {

/// One CSV row. Optional cells are written as empty strings.
struct Row {
    std::string scheme;
    std::string metric;
    double rho_db = 0.0;
    double a1 = 0.0;
    double b1 = 0.0;
    double alpha_su1 = 0.0;
    double alpha_su2 = 0.0;
    double alpha_su3 = 0.0;
    double alpha_ru2 = 0.0;
    double alpha_ru3 = 0.0;
    std::optional<double> value;
    std::optional<double> std_error;
    std::optional<double> analytic_exact;
    std::optional<double> analytic_approx;
    bool warn_low_snr = false;
    std::string error;
    std::optional<double> target_rate;
    std::optional<double> epsilon;

    friend bool operator==(const Row&, const Row&) = default;
};

struct Table {
    std::vector<Row> rows;
};

class CsvError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Column names in output order.
const std::vector<std::string>& csv_columns();

/// Numbers use %.12g; the output depends only on the row values.
void write_csv(std::ostream& out, const Table& table);
/// Reads what write_csv produced (values rounded to 12 digits). Throws CsvError.
Table read_csv(std::istream& in);

}  // namespace noma::lab
