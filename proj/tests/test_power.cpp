#include "hapsnet/power.hpp"

#include <catch_amalgamated.hpp>

#include <random>

using namespace hapsnet;
using namespace hapsnet::power;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("total power per scheme")
{
    const auto p = PowerConsumptionParams::uniform_dbm(5.0);
    const double unit = 0.0031622776601683794; // 5 dBm
    const PowerBudget b{0.1, 0.1, 4, 2};

    CHECK_THAT(total_power_w(Scheme::PassiveTris, b, p), WithinAbs(0.1 + 4 * unit + 2 * unit, 1e-15));
    CHECK_THAT(total_power_w(Scheme::PassiveTris, b, p), WithinAbs(0.118974, 1e-6));
    CHECK_THAT(total_power_w(Scheme::ActiveTris, b, p), WithinAbs(0.134785, 1e-6));
    CHECK_THAT(total_power_w(Scheme::Af, b, p), WithinAbs(0.209487, 1e-6));
    CHECK_THAT(total_power_w(Scheme::Af, b, p), WithinAbs(0.1 + 0.1 + unit + 2 * unit, 1e-15));
}

TEST_CASE("power model properties")
{
    const auto p = PowerConsumptionParams::uniform_dbm(5.0);
    for (std::size_t n = 1; n < 64; ++n) {
        const PowerBudget a{0.1, 0.1, n, 2}, b{0.1, 0.1, n + 1, 2};
        CHECK(total_power_w(Scheme::PassiveTris, b, p) > total_power_w(Scheme::PassiveTris, a, p));
        CHECK(total_power_w(Scheme::ActiveTris, b, p) > total_power_w(Scheme::ActiveTris, a, p));
        CHECK(total_power_w(Scheme::Af, b, p) == total_power_w(Scheme::Af, a, p));
        CHECK(total_power_w(Scheme::ActiveTris, a, p) >= total_power_w(Scheme::PassiveTris, a, p));
    }

    PowerConsumptionParams bad = p;
    bad.p_dc = -1.0;
    CHECK_THROWS_AS(total_power_w(Scheme::ActiveTris, {}, bad), DomainError);
}

TEST_CASE("energy efficiency")
{
    CHECK_THAT(energy_efficiency(3.0, 0.118974), WithinAbs(25.216, 1e-3));
    CHECK(energy_efficiency(0.0, 0.5) == 0.0);
    CHECK(energy_efficiency(2.0, 0.25) == 2.0 * energy_efficiency(2.0, 0.5));
    CHECK_THROWS_AS(energy_efficiency(1.0, 0.0), DomainError);

    std::mt19937_64 rng(6);
    std::uniform_real_distribution<double> u(1e-6, 50.0);
    for (int i = 0; i < 1000; ++i) {
        const double r = u(rng), w = u(rng);
        CHECK_THAT(energy_efficiency(r, w) * w, WithinRel(r, 1e-12));
    }
}
