#pragma once

#include "hapsnet/channel/fading.hpp"
#include "hapsnet/channel/pathloss.hpp"
#include "hapsnet/config.hpp"

#include <Eigen/Dense>

#include <vector>

namespace hapsnet::channel
{

/// One Monte-Carlo draw of every link. Large-scale loss is already folded into the entries.
struct ChannelRealization
{
    Eigen::RowVectorXcd h_su_af;              // HAPS -> UAV relay, 1 x M
    Eigen::MatrixXcd h_su_ris;                // HAPS -> surface, N x M
    std::vector<cplx> h_ud_af;                // UAV relay -> device
    std::vector<Eigen::VectorXcd> h_ud_ris;   // surface -> device, N entries each
    std::vector<Eigen::RowVectorXcd> h_sd_hat; // HAPS -> device estimate, 1 x M each
    std::vector<Eigen::RowVectorXcd> h_sd_true;
    std::vector<double> csi_err_var;

    double pl_su_db = 0.0;
    std::vector<double> pl_sd_db;
    std::vector<double> pl_ud_db;

    std::size_t devices() const { return h_ud_af.size(); }

    bool all_finite() const
    {
        bool ok = h_su_af.allFinite() && h_su_ris.allFinite();
        for (std::size_t i = 0; i < devices(); ++i)
            ok = ok && std::isfinite(h_ud_af[i].real()) && std::isfinite(h_ud_af[i].imag()) &&
                 h_ud_ris[i].allFinite() && h_sd_hat[i].allFinite() && h_sd_true[i].allFinite();
        return ok;
    }
};

/// Draw all links for one trial. The Rician direct-link draw is the receiver's estimate;
/// the true channel adds an independent CN(0, sigma_e^2) error to it.
template <class Rng>
ChannelRealization draw_realization(const SystemConfig& cfg, Rng& rng)
{
    const auto& g = cfg.geometry;
    const auto m = static_cast<Eigen::Index>(cfg.m_antennas);
    const auto n = static_cast<Eigen::Index>(cfg.n_elements);
    const std::size_t l = cfg.l_devices;
    const double f_mhz = g.carrier_hz / 1e6;
    const double f_ghz = g.carrier_hz / 1e9;
    const auto& profile = cfg.rician.los_profile;

    ChannelRealization r;
    r.pl_su_db = sample_pathloss_haps_db(g.d_su_m / 1000.0, f_mhz, g.elevation_su_deg, cfg.haps_pl, rng);
    r.pl_sd_db.resize(l);
    r.pl_ud_db.resize(l);
    for (std::size_t i = 0; i < l; ++i)
        r.pl_sd_db[i] = sample_pathloss_haps_db(g.d_sd_m[i] / 1000.0, f_mhz, g.elevation_sd_deg, cfg.haps_pl, rng);
    for (std::size_t i = 0; i < l; ++i)
        r.pl_ud_db[i] = sample_pathloss_uav_ground_db(g.d_ud_m[i], f_ghz, g.uav_altitude_m, rng);

    // Relay and direct links first, surface links last, so runs that differ only in N
    // or in the scheme see the same relay and direct-link draws under one seed.
    r.h_su_af = sample_rician(r.pl_su_db, cfg.rician.z_su, 1, m, rng, profile);
    r.h_ud_af.reserve(l);
    r.h_sd_hat.reserve(l);
    r.h_sd_true.reserve(l);
    r.csi_err_var.assign(l, cfg.csi.sigma_e_sq);
    for (std::size_t i = 0; i < l; ++i) {
        r.h_ud_af.push_back(sample_rician(r.pl_ud_db[i], cfg.rician.z_ud, 1, 1, rng, profile)(0, 0));
        Eigen::RowVectorXcd hat = sample_rician(r.pl_sd_db[i], cfg.rician.z_sd, 1, m, rng, profile);
        Eigen::RowVectorXcd err = sample_csi_error(1, m, cfg.csi.sigma_e_sq, rng);
        r.h_sd_true.emplace_back(hat + err);
        r.h_sd_hat.push_back(std::move(hat));
    }

    r.h_su_ris = sample_rician(r.pl_su_db, cfg.rician.z_su, n, m, rng, profile);
    r.h_ud_ris.reserve(l);
    for (std::size_t i = 0; i < l; ++i)
        r.h_ud_ris.emplace_back(sample_rician(r.pl_ud_db[i], cfg.rician.z_ud, n, 1, rng, profile));
    return r;
}

} // namespace hapsnet::channel
