#pragma once

#include "hapsnet/error.hpp"
#include "hapsnet/units.hpp"

#include <cmath>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

namespace hapsnet
{

enum class Scheme
{
    Af,
    PassiveTris,
    ActiveTris,
};

enum class AccessMode
{
    Noma,
    Oma,
};

/// How the NOMA numerator and interference sum are formed.
/// Sic: device uses its own fraction, interference from not-yet-decoded (weaker-power) signals.
/// PaperLiteral: every device uses the largest fraction and sees all other fractions as interference.
enum class SicMode
{
    Sic,
    PaperLiteral,
};

inline std::string_view to_string(Scheme s)
{
    switch (s) {
    case Scheme::Af: return "af";
    case Scheme::PassiveTris: return "passive_tris";
    case Scheme::ActiveTris: return "active_tris";
    }
    return "?";
}

inline std::string_view to_string(AccessMode a) { return a == AccessMode::Noma ? "noma" : "oma"; }

inline std::string_view to_string(SicMode m) { return m == SicMode::Sic ? "sic" : "paper-literal"; }

inline Scheme parse_scheme(std::string_view s)
{
    if (s == "af")
        return Scheme::Af;
    if (s == "passive_tris")
        return Scheme::PassiveTris;
    if (s == "active_tris")
        return Scheme::ActiveTris;
    throw DomainError("unknown scheme '" + std::string(s) + "' (expected af, passive_tris or active_tris)");
}

/// Aggregate transceiver impairment levels K^2 = k_t^2 + k_r^2 per link.
struct HwiProfile
{
    double k_su_sq = 1e-6;
    double k_ud_sq = 1e-6;
    double k_sd_sq = 1e-6;

    static HwiProfile uniform(double k_sq) { return {k_sq, k_sq, k_sq}; }
};

/// NOMA power fractions, largest first. The largest fraction goes to the weakest device.
struct NomaAllocation
{
    std::vector<double> alpha{0.7, 0.3};

    /// Empty when valid; otherwise one message per violated invariant.
    std::vector<std::string> issues() const
    {
        std::vector<std::string> out;
        if (alpha.empty()) {
            out.emplace_back("noma.alpha: at least one power fraction is required");
            return out;
        }
        const double total = std::accumulate(alpha.begin(), alpha.end(), 0.0);
        if (std::abs(total - 1.0) > 1e-12)
            out.emplace_back("noma.alpha: fractions must sum to 1 (got " + std::to_string(total) +
                             (total > 1.0 ? ", fractions exceed 1)" : ")"));
        for (double a : alpha)
            if (!(a > 0.0)) {
                out.emplace_back("noma.alpha: every fraction must be positive");
                break;
            }
        for (std::size_t i = 1; i < alpha.size(); ++i)
            if (!(alpha[i - 1] > alpha[i])) {
                out.emplace_back("noma.alpha: fractions must be strictly descending");
                break;
            }
        return out;
    }
};

enum class TrisMode
{
    Passive,
    Active,
};

inline std::string_view to_string(TrisMode m) { return m == TrisMode::Passive ? "passive" : "active"; }

/// Wrap an angle into [-pi, pi).
inline double wrap_phase(double theta)
{
    double t = std::fmod(theta + kPi, 2.0 * kPi);
    if (t < 0.0)
        t += 2.0 * kPi;
    double w = t - kPi;
    return w >= kPi ? -kPi : w;
}

/// Transmissive surface state: one amplitude shared by all elements, per-element phases.
struct TrisState
{
    double rho = 1.0;
    std::vector<double> theta;
    TrisMode mode = TrisMode::Passive;
    double sigma_r_sq = 0.0;

    /// Passive elements cannot amplify and add no noise. Active elements need rho >= 1;
    /// rho == 1 is admitted so the active model can collapse onto the passive one.
    void validate() const
    {
        if (mode == TrisMode::Passive) {
            require(rho >= 0.0 && rho <= 1.0, "passive TRIS requires 0 <= rho <= 1");
            require(sigma_r_sq == 0.0, "passive TRIS adds no thermal noise (sigma_r_sq must be 0)");
        } else {
            require(rho >= 1.0, "active TRIS requires rho >= 1");
            require(sigma_r_sq >= 0.0, "active TRIS noise variance must be non-negative");
        }
        for (double t : theta)
            require(t >= -kPi && t < kPi, "TRIS phases must lie in [-pi, pi)");
    }
};

/// Per-device SINR and the components it was assembled from (linear power).
struct SinrBreakdown
{
    double sinr = 0.0;
    double numerator = 0.0;
    double interference = 0.0;
    double hwi_distortion = 0.0;
    double csi_term = 0.0;
    double noise_terms = 0.0;

    double denominator() const { return interference + hwi_distortion + csi_term + noise_terms; }

    friend bool operator==(const SinrBreakdown&, const SinrBreakdown&) = default;
};

} // namespace hapsnet
