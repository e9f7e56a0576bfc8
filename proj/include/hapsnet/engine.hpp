#pragma once

// Seeded Monte-Carlo trials, aggregation and parameter sweeps.

#include "hapsnet/channel/realization.hpp"
#include "hapsnet/config.hpp"
#include "hapsnet/power.hpp"
#include "hapsnet/schemes/rate.hpp"
#include "hapsnet/schemes/selection.hpp"
#include "hapsnet/schemes/sinr.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <exception>
#include <random>
#include <string>
#include <thread>
#include <vector>

namespace hapsnet::engine
{

inline std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

using TrialRng = std::mt19937_64;

/// Independent stream for trial `trial` of a run seeded with `seed`.
inline TrialRng trial_rng(std::uint64_t seed, std::uint64_t trial)
{
    const std::uint64_t a = splitmix64(seed);
    const std::uint64_t b = splitmix64(a ^ splitmix64(trial + 0x632be59bd9b4e019ULL));
    std::seed_seq seq{static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(a >> 32),
                      static_cast<std::uint32_t>(b), static_cast<std::uint32_t>(b >> 32)};
    return TrialRng(seq);
}

struct TrialMetrics
{
    std::size_t trial = 0;
    Scheme scheme = Scheme::ActiveTris;
    AccessMode access = AccessMode::Noma;
    std::vector<double> sinr; // indexed by device, not by decoding rank
    std::vector<double> rate;
    double sum_rate = 0.0;
    double energy_efficiency = 0.0;

    friend bool operator==(const TrialMetrics&, const TrialMetrics&) = default;
};

/// Configuration with the surface mode forced to what `scheme` implies, validated.
inline SystemConfig resolve_for_scheme(const SystemConfig& cfg, Scheme scheme)
{
    SystemConfig c = cfg;
    switch (scheme) {
    case Scheme::Af: c.tris.mode = c.tris.rho > 1.0 ? TrisMode::Active : TrisMode::Passive; break;
    case Scheme::PassiveTris: c.tris.mode = TrisMode::Passive; break;
    case Scheme::ActiveTris: c.tris.mode = TrisMode::Active; break;
    }
    c.validate();
    return c;
}

/// Per-device SINR breakdowns for one realization, after TAS, phase alignment and ordering.
inline std::vector<SinrBreakdown> device_sinrs(const SystemConfig& cfg, Scheme scheme,
                                               const channel::ChannelRealization& real)
{
    const std::size_t l = cfg.l_devices;
    require(real.devices() == l, "run_trial: realization does not match the device count");
    std::vector<double> gains(l);
    std::vector<SinrBreakdown> out(l);
    const schemes::SinrOptions opt{cfg.sic_mode, cfg.access == AccessMode::Oma};

    if (scheme == Scheme::Af) {
        for (std::size_t i = 0; i < l; ++i)
            gains[i] = schemes::af_link(real, cfg, i).effective;
        const auto ord = schemes::order_devices_and_allocate(gains, cfg.alloc);
        for (std::size_t i = 0; i < l; ++i)
            out[i] = schemes::sinr_af(real, cfg, ord, i, opt);
        return out;
    }

    TrisState tris = cfg.tris_state(scheme);
    const Eigen::VectorXcd col = schemes::selected_su_column(real);
    const std::size_t target = schemes::alignment_target(col, real.h_ud_ris);
    schemes::align_phases(tris, col, real.h_ud_ris[target]);
    for (std::size_t i = 0; i < l; ++i)
        gains[i] = schemes::tris_link(real, col, tris, i).effective;
    const auto ord = schemes::order_devices_and_allocate(gains, cfg.alloc);
    for (std::size_t i = 0; i < l; ++i)
        out[i] = schemes::sinr_tris(real, tris, cfg, ord, i, opt);
    return out;
}

inline TrialMetrics evaluate_trial(const SystemConfig& cfg, Scheme scheme, const channel::ChannelRealization& real,
                                   std::size_t trial = 0)
{
    TrialMetrics m;
    m.trial = trial;
    m.scheme = scheme;
    m.access = cfg.access;
    for (const auto& b : device_sinrs(cfg, scheme, real))
        m.sinr.push_back(b.sinr);

    if (cfg.access == AccessMode::Oma) {
        m.rate = schemes::oma_rates(m.sinr);
    } else {
        for (double g : m.sinr)
            m.rate.push_back(std::log2(1.0 + g));
    }
    for (double r : m.rate)
        m.sum_rate += r;
    m.energy_efficiency =
        power::energy_efficiency(m.sum_rate, power::total_power_w(scheme, cfg.power_budget(), cfg.power_params));
    return m;
}

/// One trial: draw all links, then evaluate `scheme`. `cfg` must already be valid for the scheme.
template <class Rng>
TrialMetrics run_trial(const SystemConfig& cfg, Scheme scheme, Rng& rng, std::size_t trial = 0)
{
    const auto real = channel::draw_realization(cfg, rng);
    return evaluate_trial(cfg, scheme, real, trial);
}

struct Estimate
{
    double mean = 0.0;
    double half_width = 0.0; // 95% normal-approximation half-width

    friend bool operator==(const Estimate&, const Estimate&) = default;
};

struct AggregateMetrics
{
    std::size_t trials = 0;
    Estimate sum_rate;
    Estimate energy_efficiency;
    std::vector<double> mean_sinr_db;

    friend bool operator==(const AggregateMetrics&, const AggregateMetrics&) = default;
};

inline Estimate estimate(std::span<const double> xs)
{
    Estimate e;
    const auto n = static_cast<double>(xs.size());
    for (double x : xs)
        e.mean += x;
    e.mean /= n;
    if (xs.size() < 2)
        return e;
    double ss = 0.0;
    for (double x : xs)
        ss += (x - e.mean) * (x - e.mean);
    e.half_width = 1.96 * std::sqrt(ss / (n - 1.0)) / std::sqrt(n);
    return e;
}

struct RunOptions
{
    std::size_t trials = 10000;
    std::uint64_t seed = 1;
    std::size_t workers = 1;
};

/// Monte-Carlo average over `opt.trials` independent trials. Trial t always uses
/// trial_rng(seed, t), and the reduction runs in trial order, so the result does not
/// depend on the worker count.
inline AggregateMetrics monte_carlo(const SystemConfig& cfg, Scheme scheme, const RunOptions& opt)
{
    require(opt.trials >= 1, "monte_carlo: at least one trial is required");
    const SystemConfig c = resolve_for_scheme(cfg, scheme);
    const std::size_t n = opt.trials;
    const std::size_t l = c.l_devices;

    std::vector<double> rate(n), ee(n), sinr(n * l);
    auto work = [&](std::size_t first, std::size_t stride) {
        for (std::size_t t = first; t < n; t += stride) {
            auto rng = trial_rng(opt.seed, t);
            const auto m = run_trial(c, scheme, rng, t);
            rate[t] = m.sum_rate;
            ee[t] = m.energy_efficiency;
            std::copy(m.sinr.begin(), m.sinr.end(), sinr.begin() + static_cast<std::ptrdiff_t>(t * l));
        }
    };

    const std::size_t workers = std::clamp<std::size_t>(opt.workers, 1, n);
    if (workers == 1) {
        work(0, 1);
    } else {
        std::vector<std::exception_ptr> errors(workers);
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w)
            pool.emplace_back([&, w] {
                try {
                    work(w, workers);
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        for (auto& th : pool)
            th.join();
        for (auto& e : errors)
            if (e)
                std::rethrow_exception(e);
    }

    AggregateMetrics agg;
    agg.trials = n;
    agg.sum_rate = estimate(rate);
    agg.energy_efficiency = estimate(ee);
    agg.mean_sinr_db.assign(l, 0.0);
    for (std::size_t i = 0; i < l; ++i) {
        double s = 0.0;
        for (std::size_t t = 0; t < n; ++t)
            s += sinr[t * l + i];
        agg.mean_sinr_db[i] = linear_to_db(s / static_cast<double>(n));
    }
    return agg;
}

enum class Axis
{
    PtDbm,
    PBothDbm,
    NElements,
    MAntennas,
    Rho,
    HwiK,
    SigmaESq,
};

inline Axis parse_axis(std::string_view s)
{
    if (s == "p_t_dbm") return Axis::PtDbm;
    if (s == "p_both_dbm") return Axis::PBothDbm;
    if (s == "n_elements") return Axis::NElements;
    if (s == "m_antennas") return Axis::MAntennas;
    if (s == "rho") return Axis::Rho;
    if (s == "hwi_k") return Axis::HwiK;
    if (s == "sigma_e_sq") return Axis::SigmaESq;
    throw DomainError("unknown sweep axis '" + std::string(s) +
                      "' (expected p_t_dbm, p_both_dbm, n_elements, m_antennas, rho, hwi_k or sigma_e_sq)");
}

inline std::string_view to_string(Axis a)
{
    switch (a) {
    case Axis::PtDbm: return "p_t_dbm";
    case Axis::PBothDbm: return "p_both_dbm";
    case Axis::NElements: return "n_elements";
    case Axis::MAntennas: return "m_antennas";
    case Axis::Rho: return "rho";
    case Axis::HwiK: return "hwi_k";
    case Axis::SigmaESq: return "sigma_e_sq";
    }
    return "?";
}

/// Copy of `base` with the axis field set to `value`. hwi_k sets all three K^2 levels.
inline SystemConfig apply_axis(const SystemConfig& base, Axis axis, double value)
{
    auto count = [value](const char* name) {
        if (!(value >= 1.0) || std::floor(value) != value)
            throw DomainError(std::string("sweep: ") + name + " values must be positive integers");
        return static_cast<std::size_t>(value);
    };
    SystemConfig c = base;
    switch (axis) {
    case Axis::PtDbm: c.p_t = dbm_to_watts(value); break;
    case Axis::PBothDbm:
        c.p_t = dbm_to_watts(value);
        c.p_u = dbm_to_watts(value);
        break;
    case Axis::NElements: c.n_elements = count("n_elements"); break;
    case Axis::MAntennas: c.m_antennas = count("m_antennas"); break;
    case Axis::Rho: c.tris.rho = value; break;
    case Axis::HwiK: c.hwi = HwiProfile::uniform(value); break;
    case Axis::SigmaESq: c.csi.sigma_e_sq = value; break;
    }
    return c;
}

struct SweepSpec
{
    Axis axis = Axis::PBothDbm;
    std::vector<double> values;
    SystemConfig base;
    std::vector<Scheme> schemes{Scheme::ActiveTris};
    RunOptions run;
};

struct SweepRow
{
    double value = 0.0;
    Scheme scheme = Scheme::ActiveTris;
    AggregateMetrics metrics;
};

struct SweepTable
{
    Axis axis = Axis::PBothDbm;
    std::vector<SweepRow> rows;
};

/// Rejects an invalid spec before any trial runs.
inline void validate_sweep(const SweepSpec& spec)
{
    require(!spec.values.empty(), "sweep: at least one axis value is required");
    require(!spec.schemes.empty(), "sweep: at least one scheme is required");
    if (spec.values.size() > 1) {
        const bool up = spec.values[1] > spec.values[0];
        for (std::size_t i = 1; i < spec.values.size(); ++i)
            require(up ? spec.values[i] > spec.values[i - 1] : spec.values[i] < spec.values[i - 1],
                    "sweep: axis values must be strictly monotone");
    }
    for (double v : spec.values)
        for (Scheme s : spec.schemes)
            (void)resolve_for_scheme(apply_axis(spec.base, spec.axis, v), s);
}

inline SweepTable sweep(const SweepSpec& spec)
{
    validate_sweep(spec);
    SweepTable table;
    table.axis = spec.axis;
    for (double v : spec.values) {
        const SystemConfig c = apply_axis(spec.base, spec.axis, v);
        for (Scheme s : spec.schemes)
            table.rows.push_back({v, s, monte_carlo(c, s, spec.run)});
    }
    return table;
}

} // namespace hapsnet::engine
