#include "hapsnet/channel/fading.hpp"
#include "hapsnet/channel/pathloss.hpp"
#include "hapsnet/channel/realization.hpp"
#include "hapsnet/units.hpp"

#include <catch_amalgamated.hpp>

#include <cmath>
#include <random>

using namespace hapsnet;
using namespace hapsnet::channel;
using Catch::Approx;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("unit conversions")
{
    CHECK(db_to_linear(0.0) == 1.0);
    CHECK_THAT(db_to_linear(10.0), WithinRel(10.0, 1e-15));
    CHECK_THAT(dbm_to_watts(20.0), WithinRel(0.1, 1e-15));
    CHECK_THAT(watts_to_dbm(0.1), WithinAbs(20.0, 1e-12));
    CHECK_THAT(linear_to_db(db_to_linear(-37.25)), WithinAbs(-37.25, 1e-12));
}

TEST_CASE("free-space path loss")
{
    CHECK_THAT(fspl_db(1.0, 1.0), WithinAbs(32.45, 1e-12));
    CHECK_THAT(fspl_db(20.0, 3000.0), WithinAbs(128.013, 0.001));
    CHECK_THAT(fspl_db(20.2, 3000.0), WithinAbs(128.099, 0.001));

    SECTION("doubling distance adds 20 log10 2")
    {
        for (double d : {0.1, 1.0, 7.3, 20.0, 250.0})
            CHECK_THAT(fspl_db(2 * d, 3000.0) - fspl_db(d, 3000.0), WithinAbs(6.0206, 1e-4));
    }
    SECTION("strictly increasing in distance and frequency")
    {
        double prev = fspl_db(0.5, 3000.0);
        for (double d = 1.0; d < 100.0; d *= 1.7) {
            const double v = fspl_db(d, 3000.0);
            CHECK(v > prev);
            prev = v;
        }
        prev = fspl_db(20.0, 100.0);
        for (double f = 200.0; f < 60000.0; f *= 1.9) {
            const double v = fspl_db(20.0, f);
            CHECK(v > prev);
            prev = v;
        }
    }
    CHECK_THROWS_AS(fspl_db(0.0, 3000.0), DomainError);
    CHECK_THROWS_AS(fspl_db(1.0, -1.0), DomainError);
}

TEST_CASE("LoS probability")
{
    const HapsPathLossParams p;
    CHECK_THAT(los_probability(40.0, p), WithinAbs(0.6216, 1e-3));
    CHECK_THAT(los_probability(40.0, p), WithinAbs((9.668 * std::pow(40.0, 0.547) - 10.58) / 100, 1e-15));
    CHECK(los_probability(90.0, p) == 1.0);

    HapsPathLossParams forced = p;
    forced.b1 = 0.0;
    forced.b3 = 100.0;
    CHECK(los_probability(10.0, forced) == 1.0);

    SECTION("stays in [0, 1] and is non-decreasing in elevation")
    {
        double prev = 0.0;
        for (double el = 0.5; el <= 90.0; el += 0.5) {
            const double v = los_probability(el, p);
            CHECK(v >= 0.0);
            CHECK(v <= 1.0);
            CHECK(v >= prev);
            prev = v;
        }
    }
}

TEST_CASE("scintillation and UAV link")
{
    CHECK_THAT(scintillation_db(40.0), WithinAbs(14.7 * std::pow(40.0, -1.136), 1e-12));
    CHECK_THAT(scintillation_db(40.0), WithinAbs(0.2225, 1e-4));
    CHECK_THAT(pathloss_uav_ground_db(200.0, 3.0), WithinAbs(88.165, 0.001));
    CHECK_THAT(pathloss_uav_ground_db(1.0, 1.0), WithinAbs(28.0, 1e-12));
    CHECK_THAT(pathloss_uav_ground_db(1.0, 1.0, 2.5), WithinAbs(30.5, 1e-12));
    CHECK_THAT(uav_shadow_std_db(200.0), WithinAbs(1.2395, 1e-4));
}

TEST_CASE("HAPS path loss blend")
{
    const HapsPathLossParams p;
    const auto t = haps_loss_terms(20.0, 3000.0, 40.0, p);
    // Each state: FSPL + clutter + gas + scintillation + entry.
    const double base = 32.45 + 20 * std::log10(20.0) + 20 * std::log10(3000.0) + 10.0 + 14.7 * std::pow(40.0, -1.136) + 10.0;
    CHECK_THAT(t.los_db, WithinAbs(base, 1e-9));
    CHECK_THAT(t.nlos_db, WithinAbs(base + 14.42, 1e-9));
    CHECK_THAT(t.los_db, WithinAbs(148.236, 0.001));
    CHECK_THAT(t.nlos_db, WithinAbs(162.656, 0.001));
    CHECK_THAT(pathloss_haps_db(20.0, 3000.0, 40.0, p), WithinAbs(153.70, 0.01));

    SECTION("pure free space")
    {
        HapsPathLossParams free = p;
        free.b1 = 0.0;
        free.b3 = 100.0;
        free.clutter_loss_nlos_db = 0.0;
        free.atmo_gas_db = 0.0;
        free.scintillation_db = 0.0;
        free.building_entry_db = 0.0;
        CHECK_THAT(pathloss_haps_db(20.0, 3000.0, 40.0, free), WithinAbs(fspl_db(20.0, 3000.0), 1e-12));
    }
    SECTION("blend lies between the two state losses")
    {
        for (double el = 5.0; el <= 90.0; el += 5.0)
            for (double d : {5.0, 20.0, 50.0}) {
                const auto x = haps_loss_terms(d, 3000.0, el, p);
                CHECK(x.blended_db >= std::min(x.los_db, x.nlos_db) - 1e-12);
                CHECK(x.blended_db <= std::max(x.los_db, x.nlos_db) + 1e-12);
            }
    }
    SECTION("bernoulli mode picks one of the two states")
    {
        HapsPathLossParams b = p;
        b.los_mode = LosMode::Bernoulli;
        std::mt19937_64 rng(3);
        int los = 0;
        const int n = 20000;
        for (int i = 0; i < n; ++i) {
            const double v = sample_pathloss_haps_db(20.0, 3000.0, 40.0, b, rng);
            const bool is_los = std::abs(v - t.los_db) < 1e-9;
            CHECK((is_los || std::abs(v - t.nlos_db) < 1e-9));
            los += is_los;
        }
        CHECK_THAT(static_cast<double>(los) / n, WithinAbs(0.6216, 0.015));
    }
    SECTION("zero shadowing is deterministic and consumes no randomness")
    {
        std::mt19937_64 a(9), b(9);
        CHECK(sample_pathloss_haps_db(20.0, 3000.0, 40.0, p, a) == pathloss_haps_db(20.0, 3000.0, 40.0, p));
        CHECK(a() == b());
    }
}

TEST_CASE("Rician sampling")
{
    SECTION("pure LoS has unit magnitude")
    {
        std::mt19937_64 rng(1);
        const auto h = sample_rician(0.0, 1e12, 50, 4, rng);
        CHECK(h.rows() == 50);
        CHECK(h.cols() == 4);
        for (Eigen::Index i = 0; i < h.size(); ++i)
            CHECK_THAT(std::abs(h(i)), WithinAbs(1.0, 1e-5));
    }
    SECTION("infinite factor is exactly the LoS profile")
    {
        std::mt19937_64 rng(1);
        const auto h = sample_rician(0.0, std::numeric_limits<double>::infinity(), 3, 3, rng);
        CHECK(h == Eigen::MatrixXcd::Ones(3, 3));
    }
    SECTION("second moment equals the inverse path loss")
    {
        struct Case
        {
            double pl_db, z;
        };
        for (auto c : {Case{0.0, 0.0}, Case{10.0, 0.0}, Case{10.0, 1.0}, Case{10.0, 10.0}, Case{10.0, 1e12}}) {
            std::mt19937_64 rng(100 + static_cast<std::uint64_t>(c.pl_db));
            const auto h = sample_rician(c.pl_db, c.z, 1000000, 1, rng);
            CHECK_THAT(h.cwiseAbs2().mean(), WithinRel(std::pow(10.0, -c.pl_db / 10.0), 0.02));
        }
    }
    SECTION("phase ramp keeps unit LoS magnitude")
    {
        LosPhaseProfile ramp{LosPhaseProfile::Kind::Ramp, 0.4};
        const auto m = ramp.matrix(5, 2);
        for (Eigen::Index i = 0; i < m.size(); ++i)
            CHECK_THAT(std::abs(m(i)), WithinAbs(1.0, 1e-15));
        CHECK(std::abs(m(1, 0) - m(0, 0)) > 0.1);
    }
    SECTION("same seed, same draw")
    {
        std::mt19937_64 a(77), b(77);
        CHECK(sample_rician(100.0, 10.0, 8, 4, a) == sample_rician(100.0, 10.0, 8, 4, b));
    }
    std::mt19937_64 rng(0);
    CHECK_THROWS_AS(sample_rician(0.0, -1.0, 1, 1, rng), DomainError);
    CHECK_THROWS_AS(sample_rician(0.0, 1.0, 0, 1, rng), DomainError);
}

TEST_CASE("CSI error")
{
    std::mt19937_64 rng(5);
    Eigen::MatrixXcd h(2, 2);
    h << cplx{1, 2}, cplx{-0.5, 0}, cplx{0, 0.25}, cplx{3, -1};

    SECTION("perfect CSI passes the channel through")
    {
        const auto e = apply_csi_error(h, CsiErrorModel{0.0}, rng);
        CHECK(e.h_hat == h);
        CHECK(e.err_var == 0.0);
    }
    SECTION("variance is reported and matches the sampled error")
    {
        const auto e = apply_csi_error(h, CsiErrorModel{0.01}, rng);
        CHECK(e.err_var == 0.01);
        const Eigen::MatrixXcd zero = Eigen::MatrixXcd::Zero(1000000, 1);
        const auto big = apply_csi_error(zero, CsiErrorModel{0.01}, rng);
        const Eigen::VectorXcd d = big.h_hat - zero;
        CHECK_THAT(d.cwiseAbs2().mean(), WithinRel(0.01, 0.02));
        CHECK_THAT(std::abs(d.mean()), WithinAbs(0.0, 5e-4));
    }
    CHECK_THROWS_AS(apply_csi_error(h, CsiErrorModel{-1.0}, rng), DomainError);
}

TEST_CASE("realization draw")
{
    SystemConfig cfg;
    std::mt19937_64 a(42), b(42);
    const auto r1 = draw_realization(cfg, a);
    const auto r2 = draw_realization(cfg, b);

    CHECK(r1.all_finite());
    CHECK(r1.devices() == 2);
    CHECK(r1.h_su_af.size() == 4);
    CHECK(r1.h_su_ris.rows() == 30);
    CHECK(r1.h_su_ris.cols() == 4);
    CHECK(r1.h_ud_ris[1].size() == 30);
    CHECK(r1.h_su_af == r2.h_su_af);
    CHECK(r1.h_su_ris == r2.h_su_ris);
    CHECK(r1.h_sd_hat[0] == r2.h_sd_hat[0]);
    CHECK(r1.pl_ud_db == r2.pl_ud_db);

    // Blended HAPS loss has no shadowing by default; the UAV link is shadowed around 88 dB.
    CHECK_THAT(r1.pl_su_db, WithinAbs(pathloss_haps_db(20.0, 3000.0, 40.0, cfg.haps_pl), 1e-12));
    CHECK(std::abs(r1.pl_ud_db[0] - pathloss_uav_ground_db(200.0, 3.0)) < 10.0);
    CHECK(r1.h_sd_true[0] == r1.h_sd_hat[0]); // perfect CSI by default

    cfg.csi.sigma_e_sq = 0.01;
    std::mt19937_64 c(42);
    const auto r3 = draw_realization(cfg, c);
    CHECK(r3.csi_err_var[1] == 0.01);
    CHECK(r3.h_sd_true[0] != r3.h_sd_hat[0]);
}
