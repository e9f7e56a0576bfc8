#pragma once

// Run manifests: the resolved scenario plus everything needed to reproduce a run's CSV output.

#include "hapsnet/config.hpp"
#include "hapsnet/io/config_file.hpp"

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

namespace hapsnet::io
{

inline constexpr const char* kToolVersion = "hapsnet 1.0.0";

struct RunManifest
{
    std::string command; // simulate | sweep | figure
    std::string figure_id;
    std::vector<std::string> schemes;
    std::string axis;
    std::vector<double> values;
    std::uint64_t seed = 1;
    std::size_t trials = 10000;
    std::size_t workers = 1;
    std::string tool_version = kToolVersion;
    double wall_clock_s = 0.0;
    std::vector<std::string> outputs;
    SystemConfig config;
};

namespace detail
{

inline std::string join(const std::vector<std::string>& xs)
{
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i)
        out += (i ? ", " : "") + xs[i];
    return out;
}

inline std::vector<std::string> split_names(const std::string& raw)
{
    std::vector<std::string> out;
    std::stringstream ss(raw);
    std::string item;
    while (std::getline(ss, item, ','))
        if (auto t = trim(item); !t.empty())
            out.push_back(t);
    return out;
}

} // namespace detail

/// Round-trips the scenario through its text form until the text stops changing, so a run
/// and its replay start from bit-identical inputs (dBm <-> W conversion is not exact).
inline SystemConfig canonical(const SystemConfig& c)
{
    std::string text = write_config(c);
    SystemConfig out = parse_config_text(text);
    for (int i = 0; i < 16; ++i) {
        std::string next = write_config(out);
        if (next == text)
            return out;
        text = std::move(next);
        out = parse_config_text(text);
    }
    throw DomainError("config: text form does not converge");
}

inline std::string write_manifest(const RunManifest& m)
{
    std::ostringstream o;
    o << "[run]\n"
      << "command = " << m.command << "\n";
    if (!m.figure_id.empty())
        o << "figure = " << m.figure_id << "\n";
    if (!m.schemes.empty())
        o << "schemes = " << detail::join(m.schemes) << "\n";
    if (!m.axis.empty())
        o << "axis = " << m.axis << "\n"
          << "values = " << detail::fmt_list(m.values) << "\n";
    o << "seed = " << m.seed << "\n"
      << "trials = " << m.trials << "\n"
      << "workers = " << m.workers << "\n"
      << "tool_version = " << m.tool_version << "\n"
      << "wall_clock_s = " << detail::fmt_double(m.wall_clock_s) << "\n";
    if (!m.outputs.empty())
        o << "outputs = " << detail::join(m.outputs) << "\n";
    o << "\n" << write_config(m.config);
    return o.str();
}

inline RunManifest read_manifest_text(const std::string& text)
{
    boost::property_tree::ptree tree;
    std::istringstream in(text);
    try {
        boost::property_tree::ini_parser::read_ini(in, tree);
    } catch (const boost::property_tree::ini_parser_error& e) {
        throw ConfigError({"manifest parse error at line " + std::to_string(e.line()) + ": " + e.message()});
    }
    const auto run = tree.get_child_optional("run");
    if (!run)
        throw ConfigError({"manifest: missing [run] section"});

    RunManifest m;
    m.command = run->get<std::string>("command", "");
    m.figure_id = run->get<std::string>("figure", "");
    m.schemes = detail::split_names(run->get<std::string>("schemes", ""));
    m.axis = run->get<std::string>("axis", "");
    if (const auto v = run->get_optional<std::string>("values"))
        m.values = detail::to_list("run.values", *v);
    m.seed = run->get<std::uint64_t>("seed", 1);
    m.trials = run->get<std::size_t>("trials", 10000);
    m.workers = run->get<std::size_t>("workers", 1);
    m.tool_version = run->get<std::string>("tool_version", "");
    m.wall_clock_s = run->get<double>("wall_clock_s", 0.0);
    m.outputs = detail::split_names(run->get<std::string>("outputs", ""));
    m.config = config_from_tree(tree, {"run"});
    return m;
}

} // namespace hapsnet::io
