// Acceptance suite: one line per criterion. `acceptance` runs all of them,
// `acceptance --criterion N` runs one. Exit status is non-zero if any selected criterion fails.

#include "hapsnet/hapsnet.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <functional>
#include <random>
#include <string>
#include <vector>

using namespace hapsnet;

namespace
{

struct Outcome
{
    bool pass = true;
    std::string detail;

    void expect(bool ok, const std::string& what)
    {
        if (!detail.empty())
            detail += "; ";
        detail += what + (ok ? "" : " [FAILED]");
        pass = pass && ok;
    }
};

std::string num(double v, const char* f = "%.6g")
{
    char buf[64];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

engine::AggregateMetrics mc(const SystemConfig& c, Scheme s, std::size_t trials = 10000, std::uint64_t seed = 1)
{
    return engine::monte_carlo(c, s, {trials, seed, 1});
}

SystemConfig at_power(SystemConfig c, double p_dbm) { return engine::apply_axis(c, engine::Axis::PBothDbm, p_dbm); }

Outcome pathloss_spot_checks()
{
    using namespace channel;
    const HapsPathLossParams p;
    Outcome o;
    auto near = [&](const char* name, double actual, double expected, double tol) {
        o.expect(std::abs(actual - expected) <= tol, std::string(name) + "=" + num(actual, "%.4f"));
    };
    near("fspl", fspl_db(20.0, 3000.0), 128.013, 0.01);
    near("uav", pathloss_uav_ground_db(200.0, 3.0), 88.165, 0.01);
    near("sigma_ud", uav_shadow_std_db(200.0), 1.2395, 1e-3);
    near("p_los", los_probability(40.0, p), 0.6216, 1e-3);
    near("zeta_s", scintillation_db(40.0), 0.2225, 1e-3);
    near("haps", pathloss_haps_db(20.0, 3000.0, 40.0, p), 153.70, 0.01);
    return o;
}

Outcome rician_moments()
{
    Outcome o;
    const double q_db = 10.0;
    std::uint64_t seed = 1000;
    for (double z : {0.0, 1.0, 10.0, 1e12}) {
        std::mt19937_64 rng(seed++);
        const auto h = channel::sample_rician(q_db, z, 1000000, 1, rng);
        const double m = h.cwiseAbs2().mean();
        o.expect(std::abs(m - 0.1) <= 0.02 * 0.1, "Z=" + num(z) + ": " + num(m));
    }
    return o;
}

Eigen::VectorXcd cn_vector(std::size_t n, std::mt19937_64& rng)
{
    Eigen::VectorXcd v(static_cast<Eigen::Index>(n));
    for (Eigen::Index k = 0; k < v.size(); ++k)
        v(k) = channel::sample_cn01(rng);
    return v;
}

Outcome phase_oracle()
{
    Outcome o;
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> phase(-kPi, kPi);

    std::size_t beaten = 0;
    for (int draw = 0; draw < 100; ++draw) {
        const auto su = cn_vector(8, rng), ud = cn_vector(8, rng);
        const double best = std::norm(schemes::cascade(su, schemes::configure_tris_phases(su, ud, 1.0), ud));
        TrisState t;
        t.theta.resize(8);
        for (int r = 0; r < 10000; ++r) {
            for (auto& x : t.theta)
                x = phase(rng);
            if (std::norm(schemes::cascade(su, t, ud)) > best * (1 + 1e-12))
                ++beaten;
        }
    }
    o.expect(beaten == 0, "random vectors above aligned gain: " + std::to_string(beaten) + " of 1e6");

    const int steps = 720;
    const double step = 2 * kPi / steps;
    std::vector<channel::cplx> rot(steps);
    for (int i = 0; i < steps; ++i)
        rot[static_cast<std::size_t>(i)] = std::polar(1.0, i * step);
    double worst_ratio = 1.0, max_ratio = 0.0;
    for (int draw = 0; draw < 3; ++draw) {
        const auto su = cn_vector(3, rng), ud = cn_vector(3, rng);
        const double opt = std::norm(schemes::cascade(su, schemes::configure_tris_phases(su, ud, 1.0), ud));
        const channel::cplx p0 = su(0) * ud(0), p1 = su(1) * ud(1), p2 = su(2) * ud(2);
        double grid = 0.0;
        for (const auto& a : rot)
            for (const auto& b : rot) {
                const channel::cplx partial = a * p0 + b * p1;
                for (const auto& c : rot)
                    grid = std::max(grid, std::norm(partial + c * p2));
            }
        worst_ratio = std::min(worst_ratio, grid / opt);
        max_ratio = std::max(max_ratio, grid / opt);
    }
    const double bound = std::pow(std::cos(step / 2), 2);
    o.expect(max_ratio <= 1 + 1e-12 && worst_ratio >= bound,
             "grid/aligned in [" + num(worst_ratio, "%.9f") + ", " + num(max_ratio, "%.9f") + "], bound " +
                 num(bound, "%.9f"));
    return o;
}

Outcome degenerate_equivalence()
{
    Outcome o;
    const double mismatches = validation::detail::degenerate_mismatches(1000);
    o.expect(mismatches == 0.0, "mismatching seeds: " + num(mismatches) + " of 1000");
    return o;
}

Outcome fig2_trend()
{
    Outcome o;
    const SystemConfig base;
    const auto tris = mc(base, Scheme::ActiveTris);
    const auto af = mc(base, Scheme::Af);
    const double gain = tris.sum_rate.mean / af.sum_rate.mean - 1.0;
    o.expect(gain >= 0.05, "active/AF sum rate " + num(tris.sum_rate.mean) + "/" + num(af.sum_rate.mean) +
                               " (gain " + num(100 * gain, "%.3f") + "%)");

    auto monotone = [&](engine::Axis axis, std::vector<double> values, const char* label) {
        const auto t = engine::sweep({axis, values, base, {Scheme::ActiveTris}, {10000, 1, 1}});
        bool ok = true;
        std::string s = std::string(label) + ":";
        for (std::size_t i = 0; i < t.rows.size(); ++i) {
            const auto& e = t.rows[i].metrics.sum_rate;
            s += " " + num(e.mean);
            if (i > 0) {
                const auto& prev = t.rows[i - 1].metrics.sum_rate;
                ok = ok && e.mean + e.half_width + prev.half_width >= prev.mean;
            }
        }
        o.expect(ok, s);
    };
    monotone(engine::Axis::NElements, {4, 16, 30}, "N");
    monotone(engine::Axis::MAntennas, {1, 4}, "M");
    return o;
}

Outcome fig3_trend()
{
    Outcome o;
    SystemConfig c4, c30;
    c4.n_elements = 4;
    c30.n_elements = 30;
    const auto a = mc(c4, Scheme::ActiveTris);
    const auto b = mc(c30, Scheme::ActiveTris);
    o.expect(b.energy_efficiency.mean < a.energy_efficiency.mean,
             "EE N=4 " + num(a.energy_efficiency.mean) + ", N=30 " + num(b.energy_efficiency.mean));
    return o;
}

Outcome fig4_trend()
{
    Outcome o;
    SystemConfig c;
    c.n_elements = 4;
    c.m_antennas = 4;
    c.tris.rho = 4.0;
    SystemConfig p = c;
    p.tris.rho = 1.0;
    const auto a = mc(c, Scheme::ActiveTris);
    const auto q = mc(p, Scheme::PassiveTris);
    o.expect(a.energy_efficiency.mean > q.energy_efficiency.mean,
             "EE active " + num(a.energy_efficiency.mean) + ", passive " + num(q.energy_efficiency.mean) +
                 " (sum rate " + num(a.sum_rate.mean) + " vs " + num(q.sum_rate.mean) + ")");
    return o;
}

Outcome hwi_ceiling()
{
    Outcome o;
    for (double k : {0.01, 0.0}) {
        SystemConfig c;
        c.hwi = HwiProfile::uniform(k);
        const auto r50 = mc(at_power(c, 50.0), Scheme::ActiveTris);
        const auto r60 = mc(at_power(c, 60.0), Scheme::ActiveTris);
        const double step = r60.sum_rate.mean / r50.sum_rate.mean - 1.0;
        const bool ok = k > 0 ? step < 0.01 : step > 0.05;
        o.expect(ok, "K^2=" + num(k) + ": 50->60 dBm " + num(r50.sum_rate.mean) + " -> " + num(r60.sum_rate.mean) +
                         " (" + num(100 * step, "%+.3f") + "%)");
    }
    return o;
}

Outcome noma_vs_oma()
{
    Outcome o;
    const SystemConfig base;
    for (double p : {10.0, 15.0, 20.0, 25.0, 30.0, 35.0, 40.0}) {
        SystemConfig c = at_power(base, p);
        const auto noma = mc(c, Scheme::ActiveTris);
        c.access = AccessMode::Oma;
        const auto oma = mc(c, Scheme::ActiveTris);
        o.expect(noma.sum_rate.mean >= oma.sum_rate.mean,
                 "P=" + num(p) + " NOMA " + num(noma.sum_rate.mean) + " OMA " + num(oma.sum_rate.mean));
    }
    SystemConfig err = base;
    err.csi.sigma_e_sq = 0.01;
    const auto perfect = mc(base, Scheme::ActiveTris);
    const auto imperfect = mc(err, Scheme::ActiveTris);
    o.expect(imperfect.sum_rate.mean < perfect.sum_rate.mean,
             "sigma_e^2 0 -> 0.01: " + num(perfect.sum_rate.mean) + " -> " + num(imperfect.sum_rate.mean));
    return o;
}

Outcome determinism()
{
    Outcome o;
    for (const auto& id : figures::figure_ids()) {
        io::RunManifest m;
        m.command = "figure";
        m.figure_id = id;
        m.trials = 100;
        m.seed = 11;
        m.workers = 1;
        m.config = io::canonical(SystemConfig{});
        const auto one = execute(m);

        m.outputs = {one[0].name, one[1].name};
        auto replay = io::read_manifest_text(io::write_manifest(m));
        replay.workers = 8;
        const auto eight = execute(replay);
        const auto again = execute(io::read_manifest_text(io::write_manifest(m)));
        o.expect(one[0].content == eight[0].content && one[0].content == again[0].content, id);
    }
    return o;
}

struct Criterion
{
    const char* title;
    std::function<Outcome()> run;
};

const std::vector<Criterion>& criteria()
{
    static const std::vector<Criterion> all{
        {"analytic path-loss spot checks", pathloss_spot_checks},
        {"Rician second moment", rician_moments},
        {"phase-alignment oracle", phase_oracle},
        {"active/passive degenerate equivalence", degenerate_equivalence},
        {"sum rate: active TRIS vs AF, monotone in N and M", fig2_trend},
        {"energy efficiency falls with N", fig3_trend},
        {"energy efficiency: active vs passive TRIS", fig4_trend},
        {"hardware-impairment ceiling", hwi_ceiling},
        {"NOMA vs OMA, CSI error", noma_vs_oma},
        {"figure determinism across workers and replay", determinism},
    };
    return all;
}

} // namespace

int main(int argc, char** argv)
{
    std::vector<std::size_t> selected;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) {
            const int n = std::atoi(argv[++i]);
            if (n < 1 || n > static_cast<int>(criteria().size())) {
                std::fprintf(stderr, "unknown criterion %s\n", argv[i]);
                return 2;
            }
            selected.push_back(static_cast<std::size_t>(n));
        } else {
            std::fprintf(stderr, "usage: %s [--criterion N]...\n", argv[0]);
            return 2;
        }
    }
    if (selected.empty())
        for (std::size_t n = 1; n <= criteria().size(); ++n)
            selected.push_back(n);

    bool all = true;
    for (std::size_t n : selected) {
        const auto& c = criteria()[n - 1];
        const auto start = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = c.run();
        } catch (const std::exception& e) {
            out.pass = false;
            out.detail = std::string("error: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("criterion %2zu %s  %s (%.1f s): %s\n", n, out.pass ? "PASS" : "FAIL", c.title, secs,
                    out.detail.c_str());
        std::fflush(stdout);
        all = all && out.pass;
    }
    return all ? 0 : 1;
}
