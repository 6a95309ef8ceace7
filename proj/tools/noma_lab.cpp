// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The noma-lab Authors

// noma_lab: sweeps, MC-vs-analytic validation and plots for the cooperative
// D2D-NOMA model.
//
// Exit codes: 0 ok, 1 config or usage error, 2 runtime error, 3 validation failure.

#include "noma/lab/config.hpp"
#include "noma/lab/plot.hpp"
#include "noma/lab/presets.hpp"
#include "noma/lab/sweep.hpp"
#include "noma/lab/table.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

enum Exit { kOk = 0, kConfigError = 1, kRuntimeError = 2, kValidationFailed = 3 };

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Source {
    std::string config_path;
    std::string preset;
    std::optional<std::uint64_t> seed;
    std::optional<std::uint64_t> samples;
};

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw UsageError("cannot read '" + path + "'");
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

noma::lab::ExperimentConfig load_config(const Source& src)
{
    if (src.config_path.empty() == src.preset.empty())
        throw UsageError("exactly one of --config or --preset is required");
    std::string text;
    if (!src.preset.empty()) {
        const auto t = noma::lab::preset_text(src.preset);
        if (!t)
            throw UsageError("unknown preset '" + src.preset + "' (see 'preset list')");
        text = std::string(*t);
    } else {
        text = read_file(src.config_path);
    }
    auto config = noma::lab::parse_config(text);
    if (src.seed)
        config.seed = *src.seed;
    if (src.samples) {
        if (*src.samples == 0)
            throw UsageError("--samples must be >= 1");
        config.samples = *src.samples;
    }
    return config;
}

/// Writes to --out, or stdout when it is empty or "-".
void write_output(const std::string& path, const std::string& bytes)
{
    if (path.empty() || path == "-") {
        std::fwrite(bytes.data(), 1, bytes.size(), stdout);
        std::fflush(stdout);
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot open '" + path + "' for writing");
    out << bytes;
    if (!out)
        throw std::runtime_error("failed writing '" + path + "'");
}

unsigned default_workers()
{
    const char* env = std::getenv("NOMA_LAB_WORKERS");
    if (!env || !*env)
        return 1;
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (*end != '\0' || v == 0 || v > 1024)
        throw UsageError(std::string("NOMA_LAB_WORKERS must be an integer in [1, 1024], got '") + env + "'");
    return static_cast<unsigned>(v);
}

noma::lab::PlotKind plot_kind(const std::string& kind, const noma::lab::Table& table)
{
    if (kind.empty() || kind == "auto")
        return noma::lab::default_plot_kind(table);
    const auto k = noma::lab::parse_plot_kind(kind);
    if (!k)
        throw UsageError("unknown --kind '" + kind + "' (auto, lines, heatmap)");
    return *k;
}

void add_source_options(CLI::App* cmd, Source& src)
{
    cmd->add_option("--config", src.config_path, "Experiment config file");
    cmd->add_option("--preset", src.preset, "Built-in figure preset");
    cmd->add_option("--seed", src.seed, "Override the config seed");
    cmd->add_option("--samples", src.samples, "Override Monte Carlo samples per point");
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Cooperative D2D-NOMA experiment driver"};
    app.require_subcommand(1);

    Source src;
    std::string out;
    std::string format = "csv";
    std::string kind;
    std::string table_path;
    std::optional<unsigned> workers;
    double perturb = 1.0;
    std::string preset_name;

    auto* sweep = app.add_subcommand("sweep", "Run a sweep and write the result table");
    add_source_options(sweep, src);
    sweep->add_option("--out", out, "Output path (default stdout)");
    sweep->add_option("--format", format, "csv or svg")->check(CLI::IsMember({"csv", "svg"}));
    sweep->add_option("--kind", kind, "Plot kind for svg: auto, lines, heatmap");
    sweep->add_option("--workers", workers, "Monte Carlo threads (default $NOMA_LAB_WORKERS or 1)")
        ->check(CLI::Range(1u, 1024u));

    auto* validate = app.add_subcommand("validate", "Compare Monte Carlo against the analytic forms");
    add_source_options(validate, src);
    validate->add_option("--out", out, "Report path (default stdout)");
    validate->add_option("--workers", workers, "Monte Carlo threads")->check(CLI::Range(1u, 1024u));
    validate->add_option("--perturb-analytic", perturb, "Scale analytic values (negative control)")
        ->group("");

    auto* plot = app.add_subcommand("plot", "Render an SVG from a table or a config");
    add_source_options(plot, src);
    plot->add_option("--table", table_path, "CSV produced by 'sweep'");
    plot->add_option("--out", out, "SVG path (default stdout)");
    plot->add_option("--kind", kind, "auto, lines or heatmap");
    plot->add_option("--workers", workers, "Monte Carlo threads")->check(CLI::Range(1u, 1024u));

    auto* preset = app.add_subcommand("preset", "Inspect built-in presets");
    preset->require_subcommand(1);
    auto* preset_list = preset->add_subcommand("list", "List preset names");
    auto* preset_show = preset->add_subcommand("show", "Print a preset config");
    preset_show->add_option("name", preset_name, "Preset name")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kConfigError;
    }

    try {
        noma::lab::RunOptions options;
        options.workers = workers ? *workers : default_workers();
        options.analytic_scale = perturb;

        if (*preset_list) {
            for (auto name : noma::lab::preset_names())
                std::cout << name << '\n';
            return kOk;
        }
        if (*preset_show) {
            const auto text = noma::lab::preset_text(preset_name);
            if (!text)
                throw UsageError("unknown preset '" + preset_name + "'");
            std::cout << *text;
            return kOk;
        }

        if (*sweep || (*plot && table_path.empty())) {
            const auto config = load_config(src);
            const auto table = noma::lab::run_sweep(config, options);
            std::string bytes;
            if (*sweep && format == "csv") {
                std::ostringstream s;
                noma::lab::write_csv(s, table);
                bytes = s.str();
            } else {
                bytes = noma::lab::render_svg(table, plot_kind(kind, table), config.title);
            }
            write_output(out, bytes);
            std::size_t errors = 0;
            for (const auto& row : table.rows)
                errors += !row.error.empty();
            if (errors) {
                std::fprintf(stderr, "noma_lab: %zu row(s) carry errors\n", errors);
                return kRuntimeError;
            }
            return kOk;
        }

        if (*plot) {
            if (!src.config_path.empty() || !src.preset.empty())
                throw UsageError("--table cannot be combined with --config or --preset");
            std::ifstream in(table_path, std::ios::binary);
            if (!in)
                throw UsageError("cannot read '" + table_path + "'");
            const auto table = noma::lab::read_csv(in);
            write_output(out, noma::lab::render_svg(table, plot_kind(kind, table)));
            return kOk;
        }

        if (*validate) {
            const auto config = load_config(src);
            const auto report = noma::lab::run_validate(config, options);
            std::ostringstream s;
            noma::lab::write_report(s, report);
            write_output(out, s.str());
            std::fprintf(stderr, "noma_lab: %zu gating check(s), %zu failed\n", report.checked, report.failed);
            return report.passed() ? kOk : kValidationFailed;
        }
    } catch (const noma::lab::ConfigError& e) {
        std::fprintf(stderr, "noma_lab: %s\n", e.what());
        return kConfigError;
    } catch (const noma::lab::CsvError& e) {
        std::fprintf(stderr, "noma_lab: %s\n", e.what());
        return kConfigError;
    } catch (const UsageError& e) {
        std::fprintf(stderr, "noma_lab: %s\n", e.what());
        return kConfigError;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "noma_lab: %s\n", e.what());
        return kRuntimeError;
    }
    return kOk;
}
