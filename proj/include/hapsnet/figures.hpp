#pragma once

// Figure reproduction: each id maps to a fixed sweep matrix and one CSV panel.

#include "hapsnet/config.hpp"
#include "hapsnet/engine.hpp"
#include "hapsnet/io/csv.hpp"

#include <string>
#include <vector>

namespace hapsnet::figures
{

using io::fmt9;

inline const std::vector<std::string>& figure_ids()
{
    static const std::vector<std::string> ids{"fig2", "fig3", "fig4", "fig5", "fig6a", "fig6b"};
    return ids;
}

inline const std::vector<double>& power_axis_dbm()
{
    static const std::vector<double> p{0, 5, 10, 15, 20, 25, 30, 35, 40};
    return p;
}

inline const std::vector<double>& rho_axis()
{
    static const std::vector<double> r{0.25, 0.5, 0.75, 1, 2, 4, 6, 8, 10};
    return r;
}

/// Impairment levels plotted "under HWI".
inline const std::vector<double>& hwi_levels()
{
    static const std::vector<double> k{0.0, 1e-6, 0.01};
    return k;
}

struct Panel
{
    std::string id;
    io::CsvTable table;
    std::string x_column;
    std::string y_column;
    std::string ci_column;
};

namespace detail
{

inline std::string count_str(std::size_t n) { return std::to_string(n); }

inline SystemConfig with_nm(SystemConfig c, std::size_t n, std::size_t m)
{
    c.n_elements = n;
    c.m_antennas = m;
    return c;
}

inline SystemConfig perfect_csi(SystemConfig c)
{
    c.csi.sigma_e_sq = 0.0;
    return c;
}

/// Sum rate vs P for active TRIS and AF over N x M, ideal hardware.
inline Panel fig2(const SystemConfig& base, const engine::RunOptions& run)
{
    Panel p{"fig2", {{"p_dbm", "scheme", "n", "m", "sum_rate_mean", "sum_rate_ci"}, {}}, "p_dbm", "sum_rate_mean",
            "sum_rate_ci"};
    for (std::size_t n : {4u, 30u})
        for (std::size_t m : {1u, 4u}) {
            SystemConfig c = perfect_csi(with_nm(base, n, m));
            c.hwi = HwiProfile::uniform(0.0);
            for (double pdbm : power_axis_dbm())
                for (Scheme s : {Scheme::ActiveTris, Scheme::Af}) {
                    const auto a = engine::monte_carlo(engine::apply_axis(c, engine::Axis::PBothDbm, pdbm), s, run);
                    p.table.add({fmt9(pdbm), std::string(to_string(s)), count_str(n), count_str(m),
                                 fmt9(a.sum_rate.mean), fmt9(a.sum_rate.half_width)});
                }
        }
    return p;
}

/// Energy efficiency vs P. fig3: active TRIS vs AF over N x M. fig4: active vs passive, N = 4.
inline Panel ee_vs_power(const std::string& id, const SystemConfig& base, const engine::RunOptions& run,
                         const std::vector<std::size_t>& ns, const std::vector<Scheme>& schemes)
{
    Panel p{id, {{"p_dbm", "scheme", "n", "m", "rho", "hwi_k", "ee_mean", "ee_ci"}, {}}, "p_dbm", "ee_mean", "ee_ci"};
    for (std::size_t n : ns)
        for (std::size_t m : {1u, 4u})
            for (double k : hwi_levels()) {
                SystemConfig c = perfect_csi(with_nm(base, n, m));
                c.hwi = HwiProfile::uniform(k);
                for (double pdbm : power_axis_dbm())
                    for (Scheme s : schemes) {
                        SystemConfig cs = engine::apply_axis(c, engine::Axis::PBothDbm, pdbm);
                        if (s == Scheme::PassiveTris)
                            cs.tris.rho = 1.0;
                        const auto a = engine::monte_carlo(cs, s, run);
                        p.table.add({fmt9(pdbm), std::string(to_string(s)), count_str(n), count_str(m),
                                     fmt9(s == Scheme::Af ? 0.0 : cs.tris.rho), fmt9(k),
                                     fmt9(a.energy_efficiency.mean), fmt9(a.energy_efficiency.half_width)});
                    }
            }
    return p;
}

/// Energy efficiency vs rho. Cells outside a mode's admissible rho range are written as NA.
inline Panel fig5(const SystemConfig& base, const engine::RunOptions& run)
{
    Panel p{"fig5", {{"rho", "scheme", "n", "m", "hwi_k", "ee_mean", "ee_ci"}, {}}, "rho", "ee_mean", "ee_ci"};
    for (std::size_t n : {4u, 30u})
        for (std::size_t m : {1u, 4u})
            for (double k : hwi_levels()) {
                SystemConfig c = perfect_csi(with_nm(base, n, m));
                c.hwi = HwiProfile::uniform(k);
                for (double rho : rho_axis())
                    for (Scheme s : {Scheme::ActiveTris, Scheme::PassiveTris}) {
                        const bool admissible = s == Scheme::ActiveTris ? rho >= 1.0 : rho <= 1.0;
                        std::vector<std::string> row{fmt9(rho), std::string(to_string(s)), count_str(n),
                                                     count_str(m), fmt9(k)};
                        if (admissible) {
                            const auto a = engine::monte_carlo(engine::apply_axis(c, engine::Axis::Rho, rho), s, run);
                            row.push_back(fmt9(a.energy_efficiency.mean));
                            row.push_back(fmt9(a.energy_efficiency.half_width));
                        } else {
                            row.push_back("NA");
                            row.push_back("NA");
                        }
                        p.table.add(std::move(row));
                    }
            }
    return p;
}

/// NOMA vs OMA for active TRIS. Both access modes reuse the same seed, so each pair of
/// rows is computed on identical channel draws.
inline Panel fig6(const std::string& id, bool energy, const SystemConfig& base, const engine::RunOptions& run)
{
    const std::string y = energy ? "ee_mean" : "sum_rate_mean";
    const std::string ci = energy ? "ee_ci" : "sum_rate_ci";
    Panel p{id, {{"p_dbm", "access", "hwi_k", "sigma_e_sq", y, ci}, {}}, "p_dbm", y, ci};
    for (double k : hwi_levels())
        for (double err : {0.0, 0.01}) {
            SystemConfig c = base;
            c.hwi = HwiProfile::uniform(k);
            c.csi.sigma_e_sq = err;
            for (double pdbm : power_axis_dbm())
                for (AccessMode acc : {AccessMode::Noma, AccessMode::Oma}) {
                    SystemConfig cs = engine::apply_axis(c, engine::Axis::PBothDbm, pdbm);
                    cs.access = acc;
                    const auto a = engine::monte_carlo(cs, Scheme::ActiveTris, run);
                    const auto& est = energy ? a.energy_efficiency : a.sum_rate;
                    p.table.add({fmt9(pdbm), std::string(to_string(acc)), fmt9(k), fmt9(err), fmt9(est.mean),
                                 fmt9(est.half_width)});
                }
        }
    return p;
}

} // namespace detail

inline Panel run_figure(const std::string& id, const SystemConfig& base, const engine::RunOptions& run)
{
    if (id == "fig2")
        return detail::fig2(base, run);
    if (id == "fig3")
        return detail::ee_vs_power("fig3", base, run, {4, 30}, {Scheme::ActiveTris, Scheme::Af});
    if (id == "fig4")
        return detail::ee_vs_power("fig4", base, run, {4}, {Scheme::ActiveTris, Scheme::PassiveTris});
    if (id == "fig5")
        return detail::fig5(base, run);
    if (id == "fig6a")
        return detail::fig6("fig6a", false, base, run);
    if (id == "fig6b")
        return detail::fig6("fig6b", true, base, run);
    throw DomainError("unknown figure id '" + id + "' (expected fig2, fig3, fig4, fig5, fig6a or fig6b)");
}

/// Matplotlib script that draws one curve per combination of the non-numeric-axis columns.
inline std::string plot_script(const Panel& p, const std::string& csv_name)
{
    std::string s;
    s += "#!/usr/bin/env python3\n";
    s += "# Plots " + csv_name + ": " + p.y_column + " vs " + p.x_column + ", one curve per remaining key.\n";
    s += "import csv, collections, os, sys\n";
    s += "import matplotlib\nmatplotlib.use('Agg')\nimport matplotlib.pyplot as plt\n\n";
    s += "here = os.path.dirname(os.path.abspath(__file__))\n";
    s += "X, Y, CI = '" + p.x_column + "', '" + p.y_column + "', '" + p.ci_column + "'\n";
    s += "curves = collections.OrderedDict()\n";
    s += "with open(os.path.join(here, '" + csv_name + "')) as f:\n";
    s += "    for row in csv.DictReader(f):\n";
    s += "        if row[Y] == 'NA':\n            continue\n";
    s += "        key = ', '.join(f'{k}={v}' for k, v in row.items() if k not in (X, Y, CI))\n";
    s += "        curves.setdefault(key, []).append((float(row[X]), float(row[Y]), float(row[CI])))\n";
    s += "fig, ax = plt.subplots(figsize=(8, 6))\n";
    s += "for key, pts in curves.items():\n";
    s += "    pts.sort()\n";
    s += "    ax.errorbar([p[0] for p in pts], [p[1] for p in pts], yerr=[p[2] for p in pts], label=key, capsize=2)\n";
    s += "ax.set_xlabel(X)\nax.set_ylabel(Y)\nax.grid(True)\nax.legend(fontsize=6)\n";
    s += "out = sys.argv[1] if len(sys.argv) > 1 else os.path.join(here, '" + p.id + ".png')\n";
    s += "fig.savefig(out, dpi=150)\n";
    return s;
}

} // namespace hapsnet::figures
