#pragma once

// Executes what a manifest describes and returns the files it produces.

#include "hapsnet/engine.hpp"
#include "hapsnet/figures.hpp"
#include "hapsnet/io/csv.hpp"
#include "hapsnet/io/manifest.hpp"

#include <string>
#include <vector>

namespace hapsnet
{

struct OutputFile
{
    std::string name;
    std::string content;
};

namespace detail
{

inline std::vector<Scheme> parse_schemes(const std::vector<std::string>& names)
{
    std::vector<Scheme> out;
    for (const auto& n : names)
        out.push_back(parse_scheme(n));
    require(!out.empty(), "at least one scheme is required");
    return out;
}

inline std::vector<std::string> metric_header(std::vector<std::string> lead, std::size_t devices)
{
    for (const char* h : {"sum_rate_mean", "sum_rate_ci", "ee_mean", "ee_ci"})
        lead.emplace_back(h);
    for (std::size_t i = 0; i < devices; ++i)
        lead.push_back("mean_sinr_db_" + std::to_string(i + 1));
    return lead;
}

inline void append_metrics(std::vector<std::string>& row, const engine::AggregateMetrics& a)
{
    using io::fmt9;
    row.push_back(fmt9(a.sum_rate.mean));
    row.push_back(fmt9(a.sum_rate.half_width));
    row.push_back(fmt9(a.energy_efficiency.mean));
    row.push_back(fmt9(a.energy_efficiency.half_width));
    for (double s : a.mean_sinr_db)
        row.push_back(fmt9(s));
}

} // namespace detail

inline std::vector<OutputFile> execute(const io::RunManifest& m)
{
    const engine::RunOptions run{m.trials, m.seed, m.workers};
    const SystemConfig& cfg = m.config;

    if (m.command == "simulate") {
        io::CsvTable t{detail::metric_header({"scheme", "access", "trials", "seed"}, cfg.l_devices), {}};
        for (Scheme s : detail::parse_schemes(m.schemes)) {
            const auto a = engine::monte_carlo(cfg, s, run);
            std::vector<std::string> row{std::string(to_string(s)), std::string(to_string(cfg.access)),
                                         std::to_string(m.trials), std::to_string(m.seed)};
            detail::append_metrics(row, a);
            t.add(std::move(row));
        }
        return {{"simulate.csv", t.str()}};
    }

    if (m.command == "sweep") {
        engine::SweepSpec spec{engine::parse_axis(m.axis), m.values, cfg, detail::parse_schemes(m.schemes), run};
        const auto table = engine::sweep(spec);
        io::CsvTable t{detail::metric_header({m.axis, "scheme"}, cfg.l_devices), {}};
        for (const auto& r : table.rows) {
            std::vector<std::string> row{io::fmt9(r.value), std::string(to_string(r.scheme))};
            detail::append_metrics(row, r.metrics);
            t.add(std::move(row));
        }
        return {{"sweep.csv", t.str()}};
    }

    if (m.command == "figure") {
        const auto panel = figures::run_figure(m.figure_id, cfg, run);
        const std::string csv = panel.id + ".csv";
        return {{csv, panel.table.str()}, {panel.id + "_plot.py", figures::plot_script(panel, csv)}};
    }

    throw DomainError("manifest: unknown command '" + m.command + "'");
}

} // namespace hapsnet
