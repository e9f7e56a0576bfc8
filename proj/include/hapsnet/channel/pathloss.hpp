#pragma once

// Large-scale loss models for the HAPS and UAV links. All losses in dB.

#include "hapsnet/error.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <random>
#include <vector>

namespace hapsnet::channel
{

/// Link geometry in SI units (metres, Hz, degrees).
struct Geometry
{
    double d_su_m = 20000.0;
    std::vector<double> d_sd_m{20200.0, 20100.0};
    std::vector<double> d_ud_m{200.0, 100.0};
    double uav_altitude_m = 200.0;
    double elevation_su_deg = 40.0;
    double elevation_sd_deg = 40.0;
    double carrier_hz = 3.0e9;
};

enum class LosMode
{
    Blend,     // probability-weighted sum of the LoS and NLoS losses in dB
    Bernoulli, // draw the LoS state once per link and trial
};

struct HapsPathLossParams
{
    double b1 = 9.668;
    double b2 = 0.547;
    double b3 = -10.58;
    double clutter_loss_los_db = 0.0;
    double clutter_loss_nlos_db = 14.42;
    double atmo_gas_db = 10.0;
    /// Unset means the elevation-dependent value 14.7 * elevation^-1.136.
    std::optional<double> scintillation_db;
    double building_entry_db = 10.0;
    double shadow_std_los_db = 0.0;
    double shadow_std_nlos_db = 0.0;
    LosMode los_mode = LosMode::Blend;
};

/// Free-space loss with distance in km and frequency in MHz.
inline double fspl_db(double d_km, double f_mhz)
{
    require(d_km > 0.0 && f_mhz > 0.0, "fspl_db: distance and frequency must be positive");
    return 32.45 + 20.0 * std::log10(f_mhz) + 20.0 * std::log10(d_km);
}

/// LoS probability from the elevation fit b1*el^b2 + b3, read as a percentage.
inline double los_probability(double elevation_deg, const HapsPathLossParams& p)
{
    require(elevation_deg > 0.0 && elevation_deg <= 90.0, "los_probability: elevation must lie in (0, 90]");
    const double percent = p.b1 * std::pow(elevation_deg, p.b2) + p.b3;
    return std::clamp(percent / 100.0, 0.0, 1.0);
}

inline double scintillation_db(double elevation_deg)
{
    require(elevation_deg > 0.0, "scintillation_db: elevation must be positive");
    return 14.7 * std::pow(elevation_deg, -1.136);
}

inline double uav_shadow_std_db(double altitude_m) { return 4.64 * std::exp(-0.0066 * altitude_m); }

/// Urban UAV-to-ground loss, distance in metres, frequency in GHz, with an explicit shadowing term.
inline double pathloss_uav_ground_db(double d_m, double f_ghz, double shadow_db = 0.0)
{
    require(d_m > 0.0 && f_ghz > 0.0, "pathloss_uav_ground_db: distance and frequency must be positive");
    return 28.0 + 22.0 * std::log10(d_m) + 20.0 * std::log10(f_ghz) + shadow_db;
}

template <class Rng>
double sample_pathloss_uav_ground_db(double d_m, double f_ghz, double altitude_m, Rng& rng)
{
    std::normal_distribution<double> shadow(0.0, uav_shadow_std_db(altitude_m));
    return pathloss_uav_ground_db(d_m, f_ghz, shadow(rng));
}

struct HapsLossTerms
{
    double p_los = 0.0;
    double los_db = 0.0;  // basic loss plus attenuation, LoS state
    double nlos_db = 0.0; // same, NLoS state
    double blended_db = 0.0;
};

/// HAPS link loss with explicit shadowing samples for both states.
inline HapsLossTerms haps_loss_terms(double d_km, double f_mhz, double elevation_deg,
                                     const HapsPathLossParams& p, double shadow_los_db = 0.0,
                                     double shadow_nlos_db = 0.0)
{
    const double free_space = fspl_db(d_km, f_mhz);
    const double attenuation =
        p.atmo_gas_db + p.scintillation_db.value_or(scintillation_db(elevation_deg)) + p.building_entry_db;

    HapsLossTerms t;
    t.p_los = los_probability(elevation_deg, p);
    t.los_db = free_space + p.clutter_loss_los_db + shadow_los_db + attenuation;
    t.nlos_db = free_space + p.clutter_loss_nlos_db + shadow_nlos_db + attenuation;
    t.blended_db = t.p_los * t.los_db + (1.0 - t.p_los) * t.nlos_db;
    return t;
}

inline double pathloss_haps_db(double d_km, double f_mhz, double elevation_deg, const HapsPathLossParams& p)
{
    return haps_loss_terms(d_km, f_mhz, elevation_deg, p).blended_db;
}

template <class Rng>
double sample_pathloss_haps_db(double d_km, double f_mhz, double elevation_deg, const HapsPathLossParams& p,
                               Rng& rng)
{
    require(p.shadow_std_los_db >= 0.0 && p.shadow_std_nlos_db >= 0.0, "haps shadow std must be non-negative");
    // Zero std yields exactly 0 without consuming randomness, so enabling shadowing
    // is the only thing that perturbs the stream.
    auto shadow = [&rng](double std_db) {
        if (std_db == 0.0)
            return 0.0;
        return std::normal_distribution<double>(0.0, std_db)(rng);
    };
    const double s_los = shadow(p.shadow_std_los_db);
    const double s_nlos = shadow(p.shadow_std_nlos_db);
    const auto t = haps_loss_terms(d_km, f_mhz, elevation_deg, p, s_los, s_nlos);
    if (p.los_mode == LosMode::Bernoulli)
        return std::bernoulli_distribution(t.p_los)(rng) ? t.los_db : t.nlos_db;
    return t.blended_db;
}

} // namespace hapsnet::channel
