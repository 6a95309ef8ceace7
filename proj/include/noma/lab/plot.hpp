// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The noma-lab Authors

#pragma once

#include "noma/lab/table.hpp"

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace noma::lab {

enum class PlotKind { Lines, Heatmap };
std::string_view to_string(PlotKind k) noexcept;
std::optional<PlotKind> parse_plot_kind(std::string_view text) noexcept;

class PlotError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Heatmap when the rows cover a full a1 x b1 grid, otherwise lines.
PlotKind default_plot_kind(const Table& table);

/// Standalone SVG. Lines: x is the field with the most distinct values
/// (rho_db on ties), one series per (scheme, metric, other varying fields); Monte
/// Carlo values as markers, the analytic value (exact if present, else
/// approximate, omitted on rows flagged low-SNR) as a line. Heatmap: one a1 x b1 panel per remaining group.
/// Throws PlotError for an empty table or when the table does not have the
/// dimensions the kind needs. Output bytes depend only on the table.
std::string render_svg(const Table& table, PlotKind kind, std::string_view title = {});

/// Renders first, so nothing is written when rendering fails.
void emit_plot(const Table& table, PlotKind kind, const std::filesystem::path& path,
               std::string_view title = {});

}  // namespace noma::lab
