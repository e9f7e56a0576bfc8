#pragma once

// INI-style scenario files. Powers in dBm, distances in metres, angles in degrees.
//
//   [system]
//   n_elements = 30
//   p_dbm = 20
//   [noma]
//   alpha = 0.7, 0.3
//
// A key that exists in only one section may also be written unqualified at the top.

#include "hapsnet/config.hpp"
#include "hapsnet/error.hpp"

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace hapsnet::io
{

namespace detail
{

inline std::string trim(std::string s)
{
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos)
        return {};
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

inline double to_double(const std::string& field, const std::string& raw)
{
    const std::string v = trim(raw);
    std::size_t used = 0;
    double out = 0.0;
    try {
        out = std::stod(v, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (v.empty() || used != v.size())
        throw DomainError(field + ": expected a number, got '" + raw + "'");
    return out;
}

inline std::vector<double> to_list(const std::string& field, const std::string& raw)
{
    std::string v = trim(raw);
    if (!v.empty() && v.front() == '[' && v.back() == ']')
        v = v.substr(1, v.size() - 2);
    std::vector<double> out;
    std::stringstream ss(v);
    std::string item;
    while (std::getline(ss, item, ','))
        out.push_back(to_double(field, item));
    if (out.empty())
        throw DomainError(field + ": expected a comma-separated list of numbers");
    return out;
}

inline std::size_t to_count(const std::string& field, const std::string& raw)
{
    const double v = to_double(field, raw);
    if (v < 0.0 || v != static_cast<double>(static_cast<std::size_t>(v)))
        throw DomainError(field + ": expected a non-negative integer, got '" + raw + "'");
    return static_cast<std::size_t>(v);
}

inline std::string fmt_double(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline std::string fmt_list(const std::vector<double>& xs)
{
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i)
        out += (i ? ", " : "") + fmt_double(xs[i]);
    return out;
}

using Setter = std::function<void(SystemConfig&, const std::string& field, const std::string& raw)>;

struct Key
{
    const char* section;
    const char* name;
    Setter set;
};

template <class F>
Key num(const char* section, const char* name, F assign)
{
    return {section, name, [assign](SystemConfig& c, const std::string& f, const std::string& raw) {
                assign(c, to_double(f, raw));
            }};
}

inline std::vector<Key> key_table()
{
    using C = SystemConfig;
    std::vector<Key> k;
    auto choice = [](const std::string& f, const std::string& raw, std::initializer_list<const char*> allowed) {
        const std::string v = trim(raw);
        for (const char* a : allowed)
            if (v == a)
                return v;
        std::string msg = f + ": expected one of";
        for (const char* a : allowed)
            msg += std::string(" ") + a;
        throw DomainError(msg + ", got '" + raw + "'");
    };

    k.push_back({"system", "m_antennas", [](C& c, auto& f, auto& r) { c.m_antennas = to_count(f, r); }});
    k.push_back({"system", "n_elements", [](C& c, auto& f, auto& r) { c.n_elements = to_count(f, r); }});
    k.push_back({"system", "l_devices", [](C& c, auto& f, auto& r) { c.l_devices = to_count(f, r); }});
    k.push_back(num("system", "p_dbm", [](C& c, double v) { c.p_t = c.p_u = dbm_to_watts(v); }));
    k.push_back(num("system", "p_t_dbm", [](C& c, double v) { c.p_t = dbm_to_watts(v); }));
    k.push_back(num("system", "p_u_dbm", [](C& c, double v) { c.p_u = dbm_to_watts(v); }));
    k.push_back(num("system", "noise_dbm", [](C& c, double v) { c.noise_power = dbm_to_watts(v); }));
    k.push_back({"system", "access", [choice](C& c, auto& f, auto& r) {
                     c.access = choice(f, r, {"noma", "oma"}) == "noma" ? AccessMode::Noma : AccessMode::Oma;
                 }});
    k.push_back({"system", "sic_mode", [choice](C& c, auto& f, auto& r) {
                     c.sic_mode = choice(f, r, {"sic", "paper-literal"}) == "sic" ? SicMode::Sic : SicMode::PaperLiteral;
                 }});

    k.push_back(num("geometry", "d_su_m", [](C& c, double v) { c.geometry.d_su_m = v; }));
    k.push_back({"geometry", "d_sd_m", [](C& c, auto& f, auto& r) { c.geometry.d_sd_m = to_list(f, r); }});
    k.push_back({"geometry", "d_ud_m", [](C& c, auto& f, auto& r) { c.geometry.d_ud_m = to_list(f, r); }});
    k.push_back(num("geometry", "uav_altitude_m", [](C& c, double v) { c.geometry.uav_altitude_m = v; }));
    k.push_back(num("geometry", "elevation_deg", [](C& c, double v) {
        c.geometry.elevation_su_deg = c.geometry.elevation_sd_deg = v;
    }));
    k.push_back(num("geometry", "elevation_su_deg", [](C& c, double v) { c.geometry.elevation_su_deg = v; }));
    k.push_back(num("geometry", "elevation_sd_deg", [](C& c, double v) { c.geometry.elevation_sd_deg = v; }));
    k.push_back(num("geometry", "carrier_hz", [](C& c, double v) { c.geometry.carrier_hz = v; }));

    k.push_back(num("haps_pathloss", "b1", [](C& c, double v) { c.haps_pl.b1 = v; }));
    k.push_back(num("haps_pathloss", "b2", [](C& c, double v) { c.haps_pl.b2 = v; }));
    k.push_back(num("haps_pathloss", "b3", [](C& c, double v) { c.haps_pl.b3 = v; }));
    k.push_back(num("haps_pathloss", "clutter_los_db", [](C& c, double v) { c.haps_pl.clutter_loss_los_db = v; }));
    k.push_back(num("haps_pathloss", "clutter_nlos_db", [](C& c, double v) { c.haps_pl.clutter_loss_nlos_db = v; }));
    k.push_back(num("haps_pathloss", "atmo_gas_db", [](C& c, double v) { c.haps_pl.atmo_gas_db = v; }));
    k.push_back({"haps_pathloss", "scintillation_db", [](C& c, auto& f, auto& r) {
                     if (trim(r) == "auto")
                         c.haps_pl.scintillation_db.reset();
                     else
                         c.haps_pl.scintillation_db = to_double(f, r);
                 }});
    k.push_back(num("haps_pathloss", "building_entry_db", [](C& c, double v) { c.haps_pl.building_entry_db = v; }));
    k.push_back(num("haps_pathloss", "shadow_std_los_db", [](C& c, double v) { c.haps_pl.shadow_std_los_db = v; }));
    k.push_back(num("haps_pathloss", "shadow_std_nlos_db", [](C& c, double v) { c.haps_pl.shadow_std_nlos_db = v; }));
    k.push_back({"haps_pathloss", "los_mode", [choice](C& c, auto& f, auto& r) {
                     c.haps_pl.los_mode = choice(f, r, {"blend", "bernoulli"}) == "blend" ? channel::LosMode::Blend
                                                                                           : channel::LosMode::Bernoulli;
                 }});

    k.push_back(num("rician", "z", [](C& c, double v) { c.rician.z_su = c.rician.z_ud = c.rician.z_sd = v; }));
    k.push_back(num("rician", "z_su", [](C& c, double v) { c.rician.z_su = v; }));
    k.push_back(num("rician", "z_ud", [](C& c, double v) { c.rician.z_ud = v; }));
    k.push_back(num("rician", "z_sd", [](C& c, double v) { c.rician.z_sd = v; }));
    k.push_back({"rician", "los_profile", [choice](C& c, auto& f, auto& r) {
                     c.rician.los_profile.kind = choice(f, r, {"zero", "ramp"}) == "zero"
                                                     ? channel::LosPhaseProfile::Kind::Zero
                                                     : channel::LosPhaseProfile::Kind::Ramp;
                 }});
    k.push_back(num("rician", "los_ramp_step_rad", [](C& c, double v) { c.rician.los_profile.ramp_step_rad = v; }));

    k.push_back(num("hwi", "k_sq", [](C& c, double v) { c.hwi = HwiProfile::uniform(v); }));
    k.push_back(num("hwi", "k_su_sq", [](C& c, double v) { c.hwi.k_su_sq = v; }));
    k.push_back(num("hwi", "k_ud_sq", [](C& c, double v) { c.hwi.k_ud_sq = v; }));
    k.push_back(num("hwi", "k_sd_sq", [](C& c, double v) { c.hwi.k_sd_sq = v; }));

    k.push_back(num("csi", "sigma_e_sq", [](C& c, double v) { c.csi.sigma_e_sq = v; }));

    k.push_back({"tris", "mode", [choice](C& c, auto& f, auto& r) {
                     c.tris.mode = choice(f, r, {"passive", "active"}) == "passive" ? TrisMode::Passive : TrisMode::Active;
                 }});
    k.push_back(num("tris", "rho", [](C& c, double v) { c.tris.rho = v; }));
    k.push_back(num("tris", "sigma_r_dbm", [](C& c, double v) { c.tris.sigma_r_sq = dbm_to_watts(v); }));

    k.push_back({"noma", "alpha", [](C& c, auto& f, auto& r) { c.alloc.alpha = to_list(f, r); }});

    k.push_back(num("power", "p_omega_dbm", [](C& c, double v) {
        c.power_params = power::PowerConsumptionParams::uniform_dbm(v);
    }));
    k.push_back(num("power", "p_ris_act_dbm", [](C& c, double v) { c.power_params.p_ris_act = dbm_to_watts(v); }));
    k.push_back(num("power", "p_sw_dbm", [](C& c, double v) { c.power_params.p_sw = dbm_to_watts(v); }));
    k.push_back(num("power", "p_dc_dbm", [](C& c, double v) { c.power_params.p_dc = dbm_to_watts(v); }));
    k.push_back(num("power", "p_c_dbm", [](C& c, double v) { c.power_params.p_c = dbm_to_watts(v); }));
    k.push_back(num("power", "p_iotgd_dbm", [](C& c, double v) { c.power_params.p_iotgd = dbm_to_watts(v); }));
    return k;
}

// Aliases that set several fields apply before the specific keys, whatever their order in the file.
inline bool is_alias(const std::string& section, const std::string& name)
{
    return (section == "system" && name == "p_dbm") || (section == "geometry" && name == "elevation_deg") ||
           (section == "rician" && name == "z") || (section == "hwi" && name == "k_sq") ||
           (section == "power" && name == "p_omega_dbm");
}

} // namespace detail

/// Sections in `tree` other than the scenario ones (e.g. a manifest's [run]) are skipped when
/// listed in `ignored_sections`.
inline SystemConfig config_from_tree(const boost::property_tree::ptree& tree,
                                     const std::vector<std::string>& ignored_sections = {})
{
    const auto table = detail::key_table();
    std::vector<std::string> issues;

    struct Assignment
    {
        const detail::Key* key;
        std::string raw;
    };
    std::vector<Assignment> aliases, specific;

    auto find = [&](const std::string& section, const std::string& name) -> const detail::Key* {
        for (const auto& k : table)
            if (section == k.section && name == k.name)
                return &k;
        return nullptr;
    };
    auto find_unqualified = [&](const std::string& name) -> const detail::Key* {
        const detail::Key* hit = nullptr;
        for (const auto& k : table)
            if (name == k.name) {
                if (hit)
                    return nullptr;
                hit = &k;
            }
        return hit;
    };
    auto queue = [&](const detail::Key* k, std::string raw) {
        (detail::is_alias(k->section, k->name) ? aliases : specific).push_back({k, std::move(raw)});
    };

    for (const auto& [name, node] : tree) {
        if (node.empty()) {
            if (const auto* k = find_unqualified(name))
                queue(k, node.data());
            else
                issues.push_back("unknown or ambiguous key '" + name + "'");
            continue;
        }
        if (std::find(ignored_sections.begin(), ignored_sections.end(), name) != ignored_sections.end())
            continue;
        for (const auto& [key, leaf] : node) {
            if (const auto* k = find(name, key))
                queue(k, leaf.data());
            else
                issues.push_back("unknown key '" + name + "." + key + "'");
        }
    }

    SystemConfig cfg;
    for (const auto* batch : {&aliases, &specific})
        for (const auto& a : *batch) {
            try {
                a.key->set(cfg, std::string(a.key->section) + "." + a.key->name, a.raw);
            } catch (const DomainError& e) {
                issues.emplace_back(e.what());
            }
        }

    // Single-device scenarios get the only admissible allocation unless one was given.
    const bool alpha_given = std::any_of(specific.begin(), specific.end(),
                                         [](const Assignment& a) { return std::string(a.key->name) == "alpha"; });
    if (!alpha_given && cfg.l_devices == 1)
        cfg.alloc.alpha = {1.0};

    for (auto& s : cfg.issues())
        issues.push_back(std::move(s));
    if (!issues.empty())
        throw ConfigError(std::move(issues));
    return cfg;
}

inline SystemConfig parse_config_text(const std::string& text, const std::vector<std::string>& ignored_sections = {})
{
    boost::property_tree::ptree tree;
    std::istringstream in(text);
    try {
        boost::property_tree::ini_parser::read_ini(in, tree);
    } catch (const boost::property_tree::ini_parser_error& e) {
        throw ConfigError({"parse error at line " + std::to_string(e.line()) + ": " + e.message()});
    }
    return config_from_tree(tree, ignored_sections);
}

inline std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ConfigError({"cannot read '" + path + "'"});
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline SystemConfig parse_config(const std::string& path, const std::vector<std::string>& ignored_sections = {})
{
    return parse_config_text(read_file(path), ignored_sections);
}

/// Every field written explicitly, full precision, so reading it back yields the same config.
inline std::string write_config(const SystemConfig& c)
{
    using detail::fmt_double;
    using detail::fmt_list;
    std::ostringstream o;
    o << "[system]\n"
      << "m_antennas = " << c.m_antennas << "\n"
      << "n_elements = " << c.n_elements << "\n"
      << "l_devices = " << c.l_devices << "\n"
      << "p_t_dbm = " << fmt_double(watts_to_dbm(c.p_t)) << "\n"
      << "p_u_dbm = " << fmt_double(watts_to_dbm(c.p_u)) << "\n"
      << "noise_dbm = " << fmt_double(watts_to_dbm(c.noise_power)) << "\n"
      << "access = " << to_string(c.access) << "\n"
      << "sic_mode = " << to_string(c.sic_mode) << "\n";
    const auto& g = c.geometry;
    o << "\n[geometry]\n"
      << "d_su_m = " << fmt_double(g.d_su_m) << "\n"
      << "d_sd_m = " << fmt_list(g.d_sd_m) << "\n"
      << "d_ud_m = " << fmt_list(g.d_ud_m) << "\n"
      << "uav_altitude_m = " << fmt_double(g.uav_altitude_m) << "\n"
      << "elevation_su_deg = " << fmt_double(g.elevation_su_deg) << "\n"
      << "elevation_sd_deg = " << fmt_double(g.elevation_sd_deg) << "\n"
      << "carrier_hz = " << fmt_double(g.carrier_hz) << "\n";
    const auto& h = c.haps_pl;
    o << "\n[haps_pathloss]\n"
      << "b1 = " << fmt_double(h.b1) << "\n"
      << "b2 = " << fmt_double(h.b2) << "\n"
      << "b3 = " << fmt_double(h.b3) << "\n"
      << "clutter_los_db = " << fmt_double(h.clutter_loss_los_db) << "\n"
      << "clutter_nlos_db = " << fmt_double(h.clutter_loss_nlos_db) << "\n"
      << "atmo_gas_db = " << fmt_double(h.atmo_gas_db) << "\n"
      << "scintillation_db = " << (h.scintillation_db ? fmt_double(*h.scintillation_db) : std::string("auto")) << "\n"
      << "building_entry_db = " << fmt_double(h.building_entry_db) << "\n"
      << "shadow_std_los_db = " << fmt_double(h.shadow_std_los_db) << "\n"
      << "shadow_std_nlos_db = " << fmt_double(h.shadow_std_nlos_db) << "\n"
      << "los_mode = " << (h.los_mode == channel::LosMode::Blend ? "blend" : "bernoulli") << "\n";
    const auto& r = c.rician;
    o << "\n[rician]\n"
      << "z_su = " << fmt_double(r.z_su) << "\n"
      << "z_ud = " << fmt_double(r.z_ud) << "\n"
      << "z_sd = " << fmt_double(r.z_sd) << "\n"
      << "los_profile = " << (r.los_profile.kind == channel::LosPhaseProfile::Kind::Zero ? "zero" : "ramp") << "\n"
      << "los_ramp_step_rad = " << fmt_double(r.los_profile.ramp_step_rad) << "\n";
    o << "\n[hwi]\n"
      << "k_su_sq = " << fmt_double(c.hwi.k_su_sq) << "\n"
      << "k_ud_sq = " << fmt_double(c.hwi.k_ud_sq) << "\n"
      << "k_sd_sq = " << fmt_double(c.hwi.k_sd_sq) << "\n";
    o << "\n[csi]\n"
      << "sigma_e_sq = " << fmt_double(c.csi.sigma_e_sq) << "\n";
    o << "\n[tris]\n"
      << "mode = " << to_string(c.tris.mode) << "\n"
      << "rho = " << fmt_double(c.tris.rho) << "\n"
      << "sigma_r_dbm = " << fmt_double(watts_to_dbm(c.tris.sigma_r_sq)) << "\n";
    o << "\n[noma]\n"
      << "alpha = " << fmt_list(c.alloc.alpha) << "\n";
    const auto& p = c.power_params;
    o << "\n[power]\n"
      << "p_ris_act_dbm = " << fmt_double(watts_to_dbm(p.p_ris_act)) << "\n"
      << "p_sw_dbm = " << fmt_double(watts_to_dbm(p.p_sw)) << "\n"
      << "p_dc_dbm = " << fmt_double(watts_to_dbm(p.p_dc)) << "\n"
      << "p_c_dbm = " << fmt_double(watts_to_dbm(p.p_c)) << "\n"
      << "p_iotgd_dbm = " << fmt_double(watts_to_dbm(p.p_iotgd)) << "\n";
    return o.str();
}

} // namespace hapsnet::io
