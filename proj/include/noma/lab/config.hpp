// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The noma-lab Authors

#pragma once

#include "noma/model.hpp"
#include "noma/montecarlo.hpp"
#include "noma/outage_spec.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

/// Experiment configuration: a flat `key = value` text format.
///
///   # comment
///   scheme = [single, mrc]
///   metric = ergodic_sum
///   a1 = [0.6, 0.9]
///   b1 = [0.9, 0.6]
///   zip = a1, b1          # a1 and b1 vary together instead of crosswise
///   rho_db = 0:40:5       # start:stop:step, stop included
///
/// Every multi-valued field adds a sweep dimension; the sweep is the
/// cartesian product of the dimensions.
namespace noma::lab {

/// Parse or validation failure, tagged with the offending line and field.
class ConfigError : public std::runtime_error {
public:
    ConfigError(int line, std::string field, const std::string& message);
    int line() const noexcept { return line_; }
    const std::string& field() const noexcept { return field_; }

private:
    int line_;
    std::string field_;
};

enum class Metric { ErgodicSum, PerSymbolRates, Outage, OutageCapacity };
std::string_view to_string(Metric m) noexcept;
std::optional<Metric> parse_metric(std::string_view text) noexcept;

struct Range {
    double start = 0.0;
    double stop = 0.0;
    double step = 1.0;
    friend bool operator==(const Range&, const Range&) = default;
};

/// Values of one numeric field: an explicit list or an inclusive range.
struct Axis {
    std::variant<std::vector<double>, Range> spec;

    std::vector<double> values() const;
    bool is_set() const;
    friend bool operator==(const Axis&, const Axis&) = default;
};

/// Numeric fields in canonical sweep order; rho_db is last so it varies
/// fastest.
enum class Field { A1, B1, AlphaSu1, AlphaSu2, AlphaSu3, AlphaRu2, AlphaRu3, TargetRate, Epsilon, RhoDb };
inline constexpr std::size_t kFieldCount = 10;
std::string_view field_name(Field f) noexcept;
std::optional<Field> parse_field(std::string_view name) noexcept;

/// Source line of each key; ignored by equality so an echoed config compares
/// equal to the original.
struct SourceLines {
    std::map<std::string, int> line;
    int of(std::string_view key) const;
    friend bool operator==(const SourceLines&, const SourceLines&) { return true; }
};

struct ExperimentConfig {
    std::string title;
    std::vector<Scheme> schemes{Scheme::SingleSignal, Scheme::Mrc};
    Metric metric = Metric::ErgodicSum;
    std::array<Axis, kFieldCount> axes;
    std::vector<std::vector<Field>> zips;
    ThresholdConvention convention = ThresholdConvention::TwoPhase;
    std::uint64_t samples = 100'000;
    std::uint64_t seed = 1;
    std::uint64_t chunk_size = 4096;
    SourceLines lines;

    Axis& axis(Field f) { return axes[static_cast<std::size_t>(f)]; }
    const Axis& axis(Field f) const { return axes[static_cast<std::size_t>(f)]; }
    friend bool operator==(const ExperimentConfig&, const ExperimentConfig&) = default;
};

/// Throws ConfigError.
ExperimentConfig parse_config(std::string_view text);
/// Canonical text form; parse_config(echo_config(c)) == c.
std::string echo_config(const ExperimentConfig& config);

/// One fully specified experiment.
struct SweepPoint {
    Scheme scheme = Scheme::SingleSignal;
    double a1 = 0.0;
    double b1 = 0.0;
    double rho_db = 0.0;
    LinkPowers alpha;
    std::optional<double> target_rate;
    std::optional<double> epsilon;

    SystemParams params() const { return {a1, b1, db_to_linear(rho_db), alpha}; }
};

/// All points in sweep order: scheme outermost, then the fields in
/// canonical order. Throws ConfigError on invalid values or an empty sweep.
std::vector<SweepPoint> expand(const ExperimentConfig& config);

mc::McConfig mc_config(const ExperimentConfig& config, unsigned workers);

}  // namespace noma::lab
