#pragma once

#include "hapsnet/error.hpp"

#include <cmath>
#include <span>
#include <vector>

namespace hapsnet::schemes
{

/// Sum of log2(1 + SINR), bit/s/Hz.
inline double sum_rate(std::span<const double> sinrs)
{
    double total = 0.0;
    for (double g : sinrs) {
        require(g >= 0.0, "sum_rate: SINR must be non-negative");
        total += std::log2(1.0 + g);
    }
    return total;
}

/// Equal-share TDMA: each device owns 1/L of the time at full power.
inline std::vector<double> oma_rates(std::span<const double> sinr_full)
{
    require(!sinr_full.empty(), "oma_rates: need at least one device");
    const double share = 1.0 / static_cast<double>(sinr_full.size());
    std::vector<double> rates;
    rates.reserve(sinr_full.size());
    for (double g : sinr_full) {
        require(g >= 0.0, "oma_rates: SINR must be non-negative");
        rates.push_back(share * std::log2(1.0 + g));
    }
    return rates;
}

} // namespace hapsnet::schemes
