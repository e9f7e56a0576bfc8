#pragma once

// Small-scale Rician fading and direct-link CSI error.

#include "hapsnet/error.hpp"
#include "hapsnet/units.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <random>

namespace hapsnet::channel
{

using cplx = std::complex<double>;

/// Rule for the unit-modulus LoS entries. Zero gives all-ones; Ramp gives
/// exp(j * step * k) for column-major linear index k.
struct LosPhaseProfile
{
    enum class Kind
    {
        Zero,
        Ramp
    };
    Kind kind = Kind::Zero;
    double ramp_step_rad = 0.0;

    Eigen::MatrixXcd matrix(Eigen::Index rows, Eigen::Index cols) const
    {
        if (kind == Kind::Zero)
            return Eigen::MatrixXcd::Ones(rows, cols);
        Eigen::MatrixXcd m(rows, cols);
        for (Eigen::Index c = 0; c < cols; ++c)
            for (Eigen::Index r = 0; r < rows; ++r)
                m(r, c) = std::polar(1.0, ramp_step_rad * static_cast<double>(c * rows + r));
        return m;
    }
};

struct RicianParams
{
    double z_su = 10.0;
    double z_ud = 10.0;
    double z_sd = 10.0;
    LosPhaseProfile los_profile;
};

/// Draw one circularly-symmetric complex Gaussian of unit variance.
template <class Rng>
cplx sample_cn01(Rng& rng)
{
    std::normal_distribution<double> half(0.0, std::sqrt(0.5));
    const double re = half(rng);
    const double im = half(rng);
    return {re, im};
}

/// Rician channel with the large-scale loss folded in:
/// sqrt(1/Q * Z/(Z+1)) * LoS + sqrt(1/Q * 1/(Z+1)) * CN(0,1) entries, Q = 10^(pathloss_db/10).
template <class Rng>
Eigen::MatrixXcd sample_rician(double pathloss_db, double z_factor, Eigen::Index rows, Eigen::Index cols, Rng& rng,
                               const LosPhaseProfile& profile = {})
{
    require(rows >= 1 && cols >= 1, "sample_rician: dimensions must be at least 1x1");
    require(z_factor >= 0.0, "sample_rician: Rician factor must be non-negative");

    const double gain = 1.0 / db_to_linear(pathloss_db);
    double los_weight = 1.0;
    double nlos_weight = 0.0;
    if (!std::isinf(z_factor)) {
        los_weight = z_factor / (z_factor + 1.0);
        nlos_weight = 1.0 / (z_factor + 1.0);
    }
    const double a_los = std::sqrt(gain * los_weight);
    const double a_nlos = std::sqrt(gain * nlos_weight);

    Eigen::MatrixXcd h = a_los * profile.matrix(rows, cols);
    for (Eigen::Index c = 0; c < cols; ++c)
        for (Eigen::Index r = 0; r < rows; ++r)
            h(r, c) += a_nlos * sample_cn01(rng);
    return h;
}

struct CsiErrorModel
{
    double sigma_e_sq = 0.0;
};

struct CsiEstimate
{
    Eigen::MatrixXcd h_hat;
    double err_var = 0.0;
};

/// Zero-mean CN(0, variance) matrix. Zero variance consumes no randomness.
template <class Rng>
Eigen::MatrixXcd sample_csi_error(Eigen::Index rows, Eigen::Index cols, double variance, Rng& rng)
{
    require(variance >= 0.0, "csi error variance must be non-negative");
    Eigen::MatrixXcd e = Eigen::MatrixXcd::Zero(rows, cols);
    if (variance == 0.0)
        return e;
    const double s = std::sqrt(variance);
    for (Eigen::Index c = 0; c < cols; ++c)
        for (Eigen::Index r = 0; r < rows; ++r)
            e(r, c) = s * sample_cn01(rng);
    return e;
}

/// Estimate seen by the receiver: h_true plus a CN(0, sigma_e^2) error per entry.
template <class Rng>
CsiEstimate apply_csi_error(const Eigen::MatrixXcd& h_true, const CsiErrorModel& model, Rng& rng)
{
    require(model.sigma_e_sq >= 0.0, "apply_csi_error: error variance must be non-negative");
    require(h_true.allFinite(), "apply_csi_error: channel must be finite");
    return {h_true + sample_csi_error(h_true.rows(), h_true.cols(), model.sigma_e_sq, rng), model.sigma_e_sq};
}

} // namespace hapsnet::channel
