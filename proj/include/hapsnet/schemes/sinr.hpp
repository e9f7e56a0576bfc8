#pragma once

// Per-device SINR for the AF relay and transmissive-surface schemes, with
// hardware-impairment distortion and direct-link CSI error entering as variances.

#include "hapsnet/channel/realization.hpp"
#include "hapsnet/config.hpp"
#include "hapsnet/schemes/selection.hpp"
#include "hapsnet/schemes/types.hpp"

#include <cmath>
#include <numeric>

namespace hapsnet::schemes
{

struct SinrOptions
{
    SicMode sic = SicMode::Sic;
    /// Orthogonal slot: the device gets the full power and no co-scheduled interference.
    bool orthogonal = false;
};

struct PowerShares
{
    double own = 1.0;
    double interfering = 0.0;
};

inline PowerShares power_shares(const DeviceOrdering& ord, std::size_t device, const SinrOptions& opt)
{
    if (opt.orthogonal)
        return {1.0, 0.0};
    require(device < ord.alpha.size(), "sinr: device index out of range");
    PowerShares s;
    if (opt.sic == SicMode::PaperLiteral) {
        s.own = ord.alpha[ord.order.front()];
        for (std::size_t p = 1; p < ord.order.size(); ++p)
            s.interfering += ord.alpha[ord.order[p]];
        return s;
    }
    s.own = ord.alpha[device];
    for (std::size_t p = ord.rank[device] + 1; p < ord.order.size(); ++p)
        s.interfering += ord.alpha[ord.order[p]];
    return s;
}

/// Direct-link gain |h_sd|^2 at the antenna chosen by TAS on the estimate.
inline double direct_gain(const channel::ChannelRealization& real, std::size_t device)
{
    const auto& h = real.h_sd_hat[device];
    return std::norm(h(tas_select(h)));
}

/// Quantities of the AF relay path that do not depend on the power split.
struct AfLink
{
    double g_su = 0.0;     // |h_su|^2 at the selected antenna
    double lambda_sq = 0.0;
    double g_ud = 0.0;
    double g_sd = 0.0;
    double effective = 0.0; // signal power per unit P_t, relay plus direct
};

inline AfLink af_link(const channel::ChannelRealization& real, const SystemConfig& cfg, std::size_t device)
{
    require(device < real.devices(), "sinr_af: device index out of range");
    require(real.h_su_af.size() == static_cast<Eigen::Index>(cfg.m_antennas), "sinr_af: HAPS-UAV vector does not match M");
    AfLink a;
    a.g_su = std::norm(real.h_su_af(tas_select(real.h_su_af)));
    const double lambda = af_amplification(a.g_su, cfg.p_t, cfg.noise_power);
    a.lambda_sq = lambda * lambda;
    a.g_ud = std::norm(real.h_ud_af[device]);
    a.g_sd = direct_gain(real, device);
    a.effective = a.lambda_sq * cfg.p_u * a.g_su * a.g_ud + a.g_sd;
    return a;
}

inline SinrBreakdown assemble(SinrBreakdown b)
{
    b.sinr = b.numerator / b.denominator();
    return b;
}

inline SinrBreakdown sinr_af(const channel::ChannelRealization& real, const SystemConfig& cfg,
                             const DeviceOrdering& ord, std::size_t device, const SinrOptions& opt = {})
{
    const AfLink a = af_link(real, cfg, device);
    const auto shares = power_shares(ord, device, opt);
    const double pt = cfg.p_t;
    const double pu = cfg.p_u;
    const auto& k = cfg.hwi;

    SinrBreakdown b;
    b.numerator = shares.own * a.effective * pt;
    b.interference = shares.interfering * a.effective * pt;
    b.hwi_distortion = a.g_su * a.g_ud * a.lambda_sq * pt * pu * k.k_su_sq + a.g_ud * k.k_ud_sq * pu +
                       a.g_sd * k.k_sd_sq * pt;
    b.csi_term = real.csi_err_var[device] * pt * (1.0 + k.k_sd_sq);
    b.noise_terms = (1.0 + a.g_ud * a.lambda_sq * pu) * cfg.noise_power;
    return assemble(b);
}

/// HAPS -> surface column picked by TAS (largest column norm).
inline Eigen::VectorXcd selected_su_column(const channel::ChannelRealization& real)
{
    return real.h_su_ris.col(tas_select(real.h_su_ris));
}

struct TrisLink
{
    double g_cascade = 0.0; // |h_su psi h_ud|^2
    double g_psi_ud = 0.0;  // |psi h_ud|^2, scales the surface noise
    double g_sd = 0.0;
    double effective = 0.0;
};

inline TrisLink tris_link(const channel::ChannelRealization& real, const Eigen::VectorXcd& h_su_col,
                          const TrisState& tris, std::size_t device)
{
    require(device < real.devices(), "sinr_tris: device index out of range");
    const auto& h_ud = real.h_ud_ris[device];
    TrisLink t;
    t.g_cascade = std::norm(cascade(h_su_col, tris, h_ud));
    t.g_psi_ud = tris.rho * tris.rho * h_ud.squaredNorm();
    t.g_sd = direct_gain(real, device);
    t.effective = t.g_cascade + t.g_sd;
    return t;
}

inline SinrBreakdown sinr_tris(const channel::ChannelRealization& real, const TrisState& tris, const SystemConfig& cfg,
                               const DeviceOrdering& ord, std::size_t device, const SinrOptions& opt = {})
{
    tris.validate();
    require(real.h_su_ris.rows() == static_cast<Eigen::Index>(tris.theta.size()),
            "sinr_tris: surface size does not match the phase vector");
    const TrisLink t = tris_link(real, selected_su_column(real), tris, device);
    const auto shares = power_shares(ord, device, opt);
    const double pt = cfg.p_t;
    const auto& k = cfg.hwi;

    SinrBreakdown b;
    b.numerator = shares.own * t.effective * pt;
    b.interference = shares.interfering * t.effective * pt;
    b.hwi_distortion = t.g_cascade * pt * k.k_su_sq + pt * t.g_sd * k.k_sd_sq;
    b.csi_term = real.csi_err_var[device] * pt * (1.0 + k.k_sd_sq);
    b.noise_terms = tris.sigma_r_sq * t.g_psi_ud + cfg.noise_power;
    return assemble(b);
}

} // namespace hapsnet::schemes
