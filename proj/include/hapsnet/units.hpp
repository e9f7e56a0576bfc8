#pragma once

#include <cmath>

namespace hapsnet
{

inline double db_to_linear(double x_db) { return std::pow(10.0, x_db / 10.0); }

inline double linear_to_db(double x) { return 10.0 * std::log10(x); }

inline double dbm_to_watts(double x_dbm) { return db_to_linear(x_dbm) / 1000.0; }

inline double watts_to_dbm(double w) { return linear_to_db(w * 1000.0); }

inline constexpr double kPi = 3.14159265358979323846;

} // namespace hapsnet
