// hapsnet: command-line driver for simulations, sweeps, figure reproduction and self-checks.

#include "hapsnet/hapsnet.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

namespace fs = std::filesystem;
using namespace hapsnet;

namespace
{

struct CommonOptions
{
    std::string config_path;
    std::size_t trials = 0;
    std::uint64_t seed = 1;
    std::size_t threads = 1;
    bool quick = false;
    std::string out_dir = ".";
};

void add_common(CLI::App* cmd, CommonOptions& o, bool with_config = true)
{
    if (with_config)
        cmd->add_option("--config", o.config_path, "scenario file (INI); defaults apply to unset keys");
    cmd->add_option("--trials", o.trials, "Monte-Carlo trials (default 10000, 1000 with --quick)");
    cmd->add_option("--seed", o.seed, "base seed");
    cmd->add_option("--threads", o.threads, "worker threads")->check(CLI::PositiveNumber);
    cmd->add_flag("--quick", o.quick, "1000 trials instead of 10000");
    cmd->add_option("--out", o.out_dir, "output directory");
}

std::size_t resolve_trials(const CommonOptions& o) { return o.trials ? o.trials : (o.quick ? 1000 : 10000); }

SystemConfig load_config(const std::string& path)
{
    return io::canonical(path.empty() ? SystemConfig{} : io::parse_config(path));
}

/// "tris" stands for the surface mode named in the scenario file.
std::vector<std::string> resolve_schemes(const std::vector<std::string>& names, const SystemConfig& cfg)
{
    std::vector<std::string> out;
    for (const auto& n : names)
        if (n == "tris")
            out.emplace_back(cfg.tris.mode == TrisMode::Active ? "active_tris" : "passive_tris");
        else
            out.push_back(std::string(to_string(parse_scheme(n))));
    return out;
}

std::string manifest_name(const io::RunManifest& m)
{
    return (m.command == "figure" ? m.figure_id : m.command) + ".manifest.ini";
}

/// Run, write every output plus the manifest, and echo what was written.
void run_and_write(io::RunManifest m, const std::string& out_dir, bool echo_csv)
{
    fs::create_directories(out_dir);
    const auto start = std::chrono::steady_clock::now();
    const auto files = execute(m);
    m.wall_clock_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    m.outputs.clear();
    for (const auto& f : files) {
        io::write_text((fs::path(out_dir) / f.name).string(), f.content);
        m.outputs.push_back(f.name);
        if (echo_csv && f.name.ends_with(".csv"))
            std::cout << f.content;
    }
    const auto manifest = (fs::path(out_dir) / manifest_name(m)).string();
    io::write_text(manifest, io::write_manifest(m));
    for (const auto& f : files)
        std::cerr << "wrote " << (fs::path(out_dir) / f.name).string() << "\n";
    std::cerr << "wrote " << manifest << " (" << m.wall_clock_s << " s)\n";
}

io::RunManifest base_manifest(const std::string& command, const CommonOptions& o)
{
    io::RunManifest m;
    m.command = command;
    m.seed = o.seed;
    m.trials = resolve_trials(o);
    m.workers = o.threads;
    m.config = load_config(o.config_path);
    return m;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"HAPS / UAV relay link-level Monte-Carlo simulator"};
    app.require_subcommand(1);

    CommonOptions sim_opt;
    std::vector<std::string> sim_schemes{"tris"};
    auto* sim = app.add_subcommand("simulate", "Monte-Carlo averages for one scenario");
    add_common(sim, sim_opt);
    sim->add_option("--scheme", sim_schemes, "af | passive_tris | active_tris | tris (mode from config)");

    CommonOptions sw_opt;
    std::string axis;
    std::vector<double> values;
    std::vector<std::string> sw_schemes{"active_tris"};
    auto* sw = app.add_subcommand("sweep", "Sweep one configuration axis");
    add_common(sw, sw_opt);
    sw->add_option("--axis", axis, "p_t_dbm | p_both_dbm | n_elements | m_antennas | rho | hwi_k | sigma_e_sq")
        ->required();
    sw->add_option("--values", values, "axis values (strictly monotone)")->required();
    sw->add_option("--schemes", sw_schemes, "schemes to run at every axis value");

    CommonOptions fig_opt;
    std::string fig_id;
    auto* fig = app.add_subcommand("figure", "Reproduce one figure panel as CSV plus a plot script");
    add_common(fig, fig_opt);
    fig->add_option("id", fig_id, "fig2 | fig3 | fig4 | fig5 | fig6a | fig6b")
        ->required()
        ->check(CLI::IsMember(figures::figure_ids()));

    auto* val = app.add_subcommand("validate", "Run the analytic and property self-checks");

    std::string manifest_path;
    std::string replay_out = ".";
    std::size_t replay_threads = 0;
    auto* rep = app.add_subcommand("replay", "Re-run a manifest and regenerate its outputs");
    rep->add_option("manifest", manifest_path, "manifest file")->required()->check(CLI::ExistingFile);
    rep->add_option("--out", replay_out, "output directory");
    rep->add_option("--threads", replay_threads, "override the worker count (output does not depend on it)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*sim) {
            auto m = base_manifest("simulate", sim_opt);
            m.schemes = resolve_schemes(sim_schemes, m.config);
            run_and_write(m, sim_opt.out_dir, true);
        } else if (*sw) {
            auto m = base_manifest("sweep", sw_opt);
            m.axis = std::string(engine::to_string(engine::parse_axis(axis)));
            m.values = values;
            m.schemes = resolve_schemes(sw_schemes, m.config);
            run_and_write(m, sw_opt.out_dir, true);
        } else if (*fig) {
            auto m = base_manifest("figure", fig_opt);
            m.figure_id = fig_id;
            run_and_write(m, fig_opt.out_dir, false);
        } else if (*val) {
            const auto report = validation::run_validation();
            std::cout << report.table();
            std::cout << (report.passed() ? "all checks passed\n" : "VALIDATION FAILED\n");
            return report.passed() ? 0 : 1;
        } else if (*rep) {
            auto m = io::read_manifest_text(io::read_file(manifest_path));
            if (replay_threads)
                m.workers = replay_threads;
            run_and_write(m, replay_out, false);
        }
    } catch (const ConfigError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
