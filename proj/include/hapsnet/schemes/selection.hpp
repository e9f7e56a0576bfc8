#pragma once

// Transmit-antenna selection, AF gain, surface phase alignment and NOMA ordering.

#include "hapsnet/channel/fading.hpp"
#include "hapsnet/error.hpp"
#include "hapsnet/schemes/types.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <span>
#include <vector>

namespace hapsnet::schemes
{

using channel::cplx;

/// Column with the largest 2-norm; for a 1 x M row this is the antenna with the largest |h_j|.
/// Ties resolve to the lowest index.
inline Eigen::Index tas_select(const Eigen::MatrixXcd& h)
{
    require(h.rows() >= 1 && h.cols() >= 1, "tas_select: empty channel matrix");
    Eigen::Index best = 0;
    double best_norm = h.col(0).squaredNorm();
    for (Eigen::Index j = 1; j < h.cols(); ++j) {
        const double v = h.col(j).squaredNorm();
        if (v > best_norm) {
            best_norm = v;
            best = j;
        }
    }
    return best;
}

/// Relay gain that normalizes the received power: 1 / sqrt(|h|^2 P_t + sigma^2).
inline double af_amplification(double h_gain_sq, double p_t, double sigma_sq)
{
    require(sigma_sq > 0.0, "af_amplification: noise power must be positive");
    require(p_t >= 0.0 && h_gain_sq >= 0.0, "af_amplification: power and gain must be non-negative");
    return std::sqrt(1.0 / (h_gain_sq * p_t + sigma_sq));
}

/// Sum over elements of rho * exp(j theta_n) * h_su[n] * h_ud[n].
inline cplx cascade(const Eigen::VectorXcd& h_su_col, const TrisState& tris, const Eigen::VectorXcd& h_ud)
{
    require(h_su_col.size() == h_ud.size(), "cascade: channel length mismatch");
    require(static_cast<Eigen::Index>(tris.theta.size()) == h_ud.size(), "cascade: phase vector length mismatch");
    cplx acc{0.0, 0.0};
    for (Eigen::Index k = 0; k < h_ud.size(); ++k)
        acc += std::polar(1.0, tris.theta[static_cast<std::size_t>(k)]) * h_su_col(k) * h_ud(k);
    return tris.rho * acc;
}

/// Phases that cancel the phase of every element's two-hop product, so the cascade
/// gain reaches rho^2 * (sum_n |h_su,n| |h_ud,n|)^2.
inline void align_phases(TrisState& tris, const Eigen::VectorXcd& h_su_col, const Eigen::VectorXcd& h_ud)
{
    require(h_su_col.size() == h_ud.size() && h_ud.size() >= 1, "configure_tris_phases: channel length mismatch");
    tris.theta.resize(static_cast<std::size_t>(h_ud.size()));
    for (Eigen::Index k = 0; k < h_ud.size(); ++k)
        tris.theta[static_cast<std::size_t>(k)] = wrap_phase(-(std::arg(h_su_col(k)) + std::arg(h_ud(k))));
}

inline TrisState configure_tris_phases(const Eigen::VectorXcd& h_su_col, const Eigen::VectorXcd& h_ud, double rho)
{
    TrisState s;
    s.rho = rho;
    s.mode = rho > 1.0 ? TrisMode::Active : TrisMode::Passive;
    align_phases(s, h_su_col, h_ud);
    return s;
}

/// Device the shared phase profile is aligned to: the one with the weakest aligned
/// cascade (sum_n |h_su,n||h_ud,n|), lowest index on ties.
inline std::size_t alignment_target(const Eigen::VectorXcd& h_su_col, std::span<const Eigen::VectorXcd> h_ud)
{
    require(!h_ud.empty(), "alignment_target: no devices");
    std::size_t best = 0;
    double best_amp = 0.0;
    for (std::size_t i = 0; i < h_ud.size(); ++i) {
        const double amp = (h_su_col.cwiseAbs().array() * h_ud[i].cwiseAbs().array()).sum();
        if (i == 0 || amp < best_amp) {
            best_amp = amp;
            best = i;
        }
    }
    return best;
}

/// Result of NOMA ordering. order[p] is the device at rank p (ascending gain),
/// rank[d] its inverse, alpha[d] the fraction assigned to device d.
struct DeviceOrdering
{
    std::vector<std::size_t> order;
    std::vector<std::size_t> rank;
    std::vector<double> alpha;
};

/// Sort devices by ascending effective gain (stable) and hand the largest fraction to the weakest.
inline DeviceOrdering order_devices_and_allocate(std::span<const double> gains, const NomaAllocation& alloc)
{
    require(gains.size() == alloc.alpha.size(), "order_devices_and_allocate: gains and fractions differ in length");
    const std::size_t l = gains.size();
    DeviceOrdering o;
    o.order.resize(l);
    std::iota(o.order.begin(), o.order.end(), std::size_t{0});
    std::stable_sort(o.order.begin(), o.order.end(), [&](std::size_t a, std::size_t b) { return gains[a] < gains[b]; });

    std::vector<double> sorted_alpha = alloc.alpha;
    std::sort(sorted_alpha.begin(), sorted_alpha.end(), std::greater<>());

    o.rank.resize(l);
    o.alpha.resize(l);
    for (std::size_t p = 0; p < l; ++p) {
        o.rank[o.order[p]] = p;
        o.alpha[o.order[p]] = sorted_alpha[p];
    }
    return o;
}

} // namespace hapsnet::schemes
