#pragma once

// Consumed power per scheme and the resulting energy efficiency.

#include "hapsnet/error.hpp"
#include "hapsnet/schemes/types.hpp"
#include "hapsnet/units.hpp"

#include <cstddef>

namespace hapsnet::power
{

/// Per-unit consumption figures, in watts.
struct PowerConsumptionParams
{
    double p_ris_act = dbm_to_watts(5.0);
    double p_sw = dbm_to_watts(5.0);
    double p_dc = dbm_to_watts(5.0);
    double p_c = dbm_to_watts(5.0);
    double p_iotgd = dbm_to_watts(5.0);

    static PowerConsumptionParams uniform_dbm(double p_dbm)
    {
        const double w = dbm_to_watts(p_dbm);
        return {w, w, w, w, w};
    }
};

/// Inputs that vary per scenario rather than per hardware unit.
struct PowerBudget
{
    double p_t = 0.1;
    double p_u = 0.1;
    std::size_t n_elements = 1;
    std::size_t l_devices = 1;
};

/// Relay-side overhead: UAV transmit plus circuit for AF, per-element switching
/// (plus bias and amplifier output when active) for the surface.
inline double relay_overhead_w(Scheme scheme, const PowerBudget& b, const PowerConsumptionParams& p)
{
    const auto n = static_cast<double>(b.n_elements);
    switch (scheme) {
    case Scheme::Af: return b.p_u + p.p_c;
    case Scheme::PassiveTris: return n * p.p_sw;
    case Scheme::ActiveTris: return p.p_ris_act + n * p.p_sw + n * p.p_dc;
    }
    throw DomainError("total_power_w: unknown scheme");
}

inline double total_power_w(Scheme scheme, const PowerBudget& b, const PowerConsumptionParams& p)
{
    require(b.p_t >= 0.0 && b.p_u >= 0.0, "total_power_w: transmit powers must be non-negative");
    require(p.p_ris_act >= 0.0 && p.p_sw >= 0.0 && p.p_dc >= 0.0 && p.p_c >= 0.0 && p.p_iotgd >= 0.0,
            "total_power_w: consumption parameters must be non-negative");
    return b.p_t + relay_overhead_w(scheme, b, p) + static_cast<double>(b.l_devices) * p.p_iotgd;
}

/// Sum rate (bit/s/Hz) per consumed watt.
inline double energy_efficiency(double sum_rate_bpshz, double total_power_w)
{
    require(total_power_w > 0.0, "energy_efficiency: total power must be positive");
    return sum_rate_bpshz / total_power_w;
}

} // namespace hapsnet::power
