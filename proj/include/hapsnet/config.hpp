#pragma once

#include "hapsnet/channel/fading.hpp"
#include "hapsnet/channel/pathloss.hpp"
#include "hapsnet/power.hpp"
#include "hapsnet/schemes/types.hpp"
#include "hapsnet/units.hpp"

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

namespace hapsnet
{

/// Surface settings shared by every TRIS run; phases are configured per trial.
struct TrisTemplate
{
    TrisMode mode = TrisMode::Active;
    double rho = 4.0;
    double sigma_r_sq = dbm_to_watts(-94.0);
};

/// Full scenario description. Powers in watts, distances in metres.
/// Defaults reproduce the reference parameter set (P = 20 dBm, f = 3 GHz, 40 deg, L = 2, ...).
struct SystemConfig
{
    std::size_t m_antennas = 4;
    std::size_t n_elements = 30;
    std::size_t l_devices = 2;
    channel::Geometry geometry;
    channel::RicianParams rician;
    channel::HapsPathLossParams haps_pl;
    HwiProfile hwi;
    channel::CsiErrorModel csi;
    double noise_power = dbm_to_watts(-94.0);
    TrisTemplate tris;
    NomaAllocation alloc;
    double p_t = dbm_to_watts(20.0);
    double p_u = dbm_to_watts(20.0);
    power::PowerConsumptionParams power_params;
    AccessMode access = AccessMode::Noma;
    SicMode sic_mode = SicMode::Sic;

    power::PowerBudget power_budget() const { return {p_t, p_u, n_elements, l_devices}; }

    /// Surface state used by `scheme` before phase configuration.
    TrisState tris_state(Scheme scheme) const
    {
        TrisState s;
        s.rho = tris.rho;
        s.theta.assign(n_elements, 0.0);
        if (scheme == Scheme::ActiveTris) {
            s.mode = TrisMode::Active;
            s.sigma_r_sq = tris.sigma_r_sq;
        } else {
            s.mode = TrisMode::Passive;
            s.sigma_r_sq = 0.0;
        }
        return s;
    }

    /// Every violated invariant, field-qualified. Empty when the configuration is usable.
    std::vector<std::string> issues() const
    {
        std::vector<std::string> out;
        auto check = [&out](bool ok, std::string msg) {
            if (!ok)
                out.push_back(std::move(msg));
        };
        auto finite_pos = [](double v) { return std::isfinite(v) && v > 0.0; };
        auto finite_nonneg = [](double v) { return std::isfinite(v) && v >= 0.0; };

        check(m_antennas >= 1, "system.m_antennas: must be >= 1");
        check(n_elements >= 1, "system.n_elements: must be >= 1");
        check(l_devices >= 1, "system.l_devices: must be >= 1");
        check(finite_pos(noise_power), "system.noise: noise power must be positive");
        check(finite_nonneg(p_t), "system.p_t: transmit power must be non-negative");
        check(finite_nonneg(p_u), "system.p_u: UAV power must be non-negative");

        const auto& g = geometry;
        check(finite_pos(g.d_su_m), "geometry.d_su_m: must be positive");
        check(g.d_sd_m.size() == l_devices, "geometry.d_sd_m: need one entry per device (" +
                                                std::to_string(l_devices) + ")");
        check(g.d_ud_m.size() == l_devices, "geometry.d_ud_m: need one entry per device (" +
                                                std::to_string(l_devices) + ")");
        for (double d : g.d_sd_m)
            check(finite_pos(d), "geometry.d_sd_m: distances must be positive");
        for (double d : g.d_ud_m)
            check(finite_pos(d), "geometry.d_ud_m: distances must be positive");
        check(finite_pos(g.uav_altitude_m), "geometry.uav_altitude_m: must be positive");
        check(g.elevation_su_deg > 0.0 && g.elevation_su_deg <= 90.0, "geometry.elevation_su_deg: must lie in (0, 90]");
        check(g.elevation_sd_deg > 0.0 && g.elevation_sd_deg <= 90.0, "geometry.elevation_sd_deg: must lie in (0, 90]");
        check(finite_pos(g.carrier_hz), "geometry.carrier_hz: must be positive");

        check(finite_nonneg(haps_pl.clutter_loss_los_db), "haps_pathloss.clutter_los_db: must be >= 0");
        check(finite_nonneg(haps_pl.clutter_loss_nlos_db), "haps_pathloss.clutter_nlos_db: must be >= 0");
        check(finite_nonneg(haps_pl.shadow_std_los_db), "haps_pathloss.shadow_std_los_db: must be >= 0");
        check(finite_nonneg(haps_pl.shadow_std_nlos_db), "haps_pathloss.shadow_std_nlos_db: must be >= 0");

        check(rician.z_su >= 0.0, "rician.z_su: must be >= 0");
        check(rician.z_ud >= 0.0, "rician.z_ud: must be >= 0");
        check(rician.z_sd >= 0.0, "rician.z_sd: must be >= 0");

        check(finite_nonneg(hwi.k_su_sq), "hwi.k_su_sq: must be >= 0");
        check(finite_nonneg(hwi.k_ud_sq), "hwi.k_ud_sq: must be >= 0");
        check(finite_nonneg(hwi.k_sd_sq), "hwi.k_sd_sq: must be >= 0");
        check(finite_nonneg(csi.sigma_e_sq), "csi.sigma_e_sq: must be >= 0");

        for (auto& s : alloc.issues())
            out.push_back(s);
        check(alloc.alpha.size() == l_devices,
              "noma.alpha: need one fraction per device (" + std::to_string(l_devices) + ")");

        if (tris.mode == TrisMode::Passive) {
            check(tris.rho <= 1.0, "tris.rho: passive mode requires rho <= 1 (tris.mode = passive, tris.rho = " +
                                       std::to_string(tris.rho) + ")");
        } else {
            check(tris.rho >= 1.0, "tris.rho: active mode requires rho >= 1 (tris.mode = active, tris.rho = " +
                                       std::to_string(tris.rho) + ")");
        }
        check(finite_nonneg(tris.rho), "tris.rho: must be >= 0");
        check(finite_nonneg(tris.sigma_r_sq), "tris.sigma_r: noise power must be >= 0");

        const auto& pp = power_params;
        check(finite_nonneg(pp.p_ris_act) && finite_nonneg(pp.p_sw) && finite_nonneg(pp.p_dc) &&
                  finite_nonneg(pp.p_c) && finite_nonneg(pp.p_iotgd),
              "power: consumption parameters must be >= 0");
        return out;
    }

    void validate() const
    {
        auto v = issues();
        if (!v.empty())
            throw ConfigError(std::move(v));
    }
};

} // namespace hapsnet
