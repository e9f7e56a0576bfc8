#pragma once

// Self-check suite behind `hapsnet validate`: analytic spot values, sampling moments,
// the phase-alignment oracle and degenerate equivalences. Expected values are frozen
// literals, so a changed model constant shows up as a failing row.

#include "hapsnet/channel/fading.hpp"
#include "hapsnet/channel/pathloss.hpp"
#include "hapsnet/engine.hpp"
#include "hapsnet/power.hpp"
#include "hapsnet/schemes/rate.hpp"
#include "hapsnet/schemes/selection.hpp"
#include "hapsnet/units.hpp"

#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

namespace hapsnet::validation
{

struct Check
{
    std::string name;
    double expected = 0.0;
    double actual = 0.0;
    double tolerance = 0.0;
    bool relative = false;

    bool passed() const
    {
        const double err = std::abs(actual - expected);
        return relative ? err <= tolerance * std::abs(expected) : err <= tolerance;
    }
};

struct Report
{
    std::vector<Check> checks;

    bool passed() const
    {
        for (const auto& c : checks)
            if (!c.passed())
                return false;
        return true;
    }

    std::string table() const
    {
        std::string out;
        char line[256];
        std::snprintf(line, sizeof line, "%-44s %14s %14s %12s  %s\n", "check", "expected", "actual", "tolerance",
                      "result");
        out += line;
        for (const auto& c : checks) {
            std::snprintf(line, sizeof line, "%-44s %14.6f %14.6f %11.3g%s  %s\n", c.name.c_str(), c.expected,
                          c.actual, c.tolerance, c.relative ? "r" : " ", c.passed() ? "PASS" : "FAIL");
            out += line;
        }
        return out;
    }
};

namespace detail
{

inline double mean_gain(double pl_db, double z, std::size_t samples, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    const auto h = channel::sample_rician(pl_db, z, static_cast<Eigen::Index>(samples), 1, rng);
    return h.cwiseAbs2().mean();
}

/// Smallest margin (aligned gain minus best random-phase gain) over `draws` random channels.
inline double phase_oracle_margin(std::size_t n, std::size_t draws, std::size_t random_vectors, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> phase(-kPi, kPi);
    double worst = std::numeric_limits<double>::infinity();
    for (std::size_t d = 0; d < draws; ++d) {
        Eigen::VectorXcd su(static_cast<Eigen::Index>(n)), ud(static_cast<Eigen::Index>(n));
        for (std::size_t k = 0; k < n; ++k) {
            su(static_cast<Eigen::Index>(k)) = channel::sample_cn01(rng);
            ud(static_cast<Eigen::Index>(k)) = channel::sample_cn01(rng);
        }
        const auto aligned = schemes::configure_tris_phases(su, ud, 1.0);
        const double best = std::norm(schemes::cascade(su, aligned, ud));
        TrisState trial;
        trial.theta.resize(n);
        double best_random = 0.0;
        for (std::size_t r = 0; r < random_vectors; ++r) {
            for (auto& t : trial.theta)
                t = phase(rng);
            best_random = std::max(best_random, std::norm(schemes::cascade(su, trial, ud)));
        }
        worst = std::min(worst, (best - best_random) / best);
    }
    return worst;
}

/// Active surface at rho = 1 with no noise and no amplifier/bias draw must reproduce the
/// passive surface exactly. Returns the number of seeds where any metric differs.
inline double degenerate_mismatches(std::size_t seeds)
{
    SystemConfig base;
    base.tris.rho = 1.0;
    base.tris.sigma_r_sq = 0.0;
    base.power_params.p_ris_act = 0.0;
    base.power_params.p_dc = 0.0;
    const auto a_cfg = engine::resolve_for_scheme(base, Scheme::ActiveTris);
    const auto p_cfg = engine::resolve_for_scheme(base, Scheme::PassiveTris);
    double mismatches = 0.0;
    for (std::size_t s = 0; s < seeds; ++s) {
        auto ra = engine::trial_rng(s, 0);
        auto rp = engine::trial_rng(s, 0);
        const auto ma = engine::run_trial(a_cfg, Scheme::ActiveTris, ra);
        auto mp = engine::run_trial(p_cfg, Scheme::PassiveTris, rp);
        mp.scheme = ma.scheme; // the tag is the only field allowed to differ
        if (!(ma == mp))
            mismatches += 1.0;
    }
    return mismatches;
}

} // namespace detail

inline Report run_validation()
{
    using namespace channel;
    Report r;
    auto add = [&r](std::string name, double expected, double actual, double tol, bool rel = false) {
        r.checks.push_back({std::move(name), expected, actual, tol, rel});
    };

    add("db_to_linear(10 dB)", 10.0, db_to_linear(10.0), 1e-12);
    add("dbm_to_watts(20 dBm) [W]", 0.1, dbm_to_watts(20.0), 1e-12);
    add("fspl(20 km, 3000 MHz) [dB]", 128.013, fspl_db(20.0, 3000.0), 0.01);
    add("fspl(20.2 km, 3000 MHz) [dB]", 128.099, fspl_db(20.2, 3000.0), 0.01);
    add("uav pathloss(200 m, 3 GHz) [dB]", 88.165, pathloss_uav_ground_db(200.0, 3.0), 0.01);
    add("uav shadow std(AL=200 m) [dB]", 1.2395, uav_shadow_std_db(200.0), 1e-3);
    const HapsPathLossParams haps;
    add("los probability(40 deg)", 0.6216, los_probability(40.0, haps), 1e-3);
    add("scintillation(40 deg) [dB]", 0.2225, scintillation_db(40.0), 1e-3);
    add("haps pathloss(20 km, 40 deg) [dB]", 153.70, pathloss_haps_db(20.0, 3000.0, 40.0, haps), 0.01);

    for (double z : {0.0, 1.0, 10.0, 1e12})
        add("rician E|h|^2, Z=" + std::to_string(z).substr(0, 6) + ", Q=10 dB", 0.1,
            detail::mean_gain(10.0, z, 1000000, 7 + static_cast<std::uint64_t>(z > 1e6 ? 99 : z)), 0.02, true);

    {
        std::mt19937_64 rng(11);
        const Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(1000000, 1);
        const auto est = apply_csi_error(h, CsiErrorModel{0.01}, rng);
        add("csi error sample variance", 0.01, est.h_hat.cwiseAbs2().mean(), 0.02, true);
    }

    add("af gain identity L^2(|h|^2 P + s^2)", 1.0,
        std::pow(schemes::af_amplification(0.09, 1.0, 0.01), 2) * (0.09 + 0.01), 1e-12);
    add("sum rate([1, 3]) [bit/s/Hz]", 3.0, schemes::sum_rate(std::vector<double>{1.0, 3.0}), 1e-12);
    {
        const auto oma = schemes::oma_rates(std::vector<double>{3.0, 15.0});
        add("oma sum rate([3, 15]) [bit/s/Hz]", 3.0, oma[0] + oma[1], 1e-12);
    }

    const auto pp = power::PowerConsumptionParams::uniform_dbm(5.0);
    add("passive power N=4 L=2 [W]", 0.118974,
        power::total_power_w(Scheme::PassiveTris, {0.1, 0.1, 4, 2}, pp), 1e-6);
    add("active power N=4 L=2 [W]", 0.134785, power::total_power_w(Scheme::ActiveTris, {0.1, 0.1, 4, 2}, pp), 1e-6);
    add("af power L=2 [W]", 0.209487, power::total_power_w(Scheme::Af, {0.1, 0.1, 4, 2}, pp), 1e-6);

    add("phase alignment margin vs 1e4 random (N=8)", 0.0,
        std::min(0.0, detail::phase_oracle_margin(8, 20, 10000, 5)), 1e-12);
    add("active(rho=1) vs passive mismatches", 0.0, detail::degenerate_mismatches(100), 0.0);
    return r;
}

} // namespace hapsnet::validation
