#include <doctest.h>

#include "scslab/scs.hpp"
#include "scslab/verify.hpp"

using namespace scslab;

namespace {

SCSConfig make_cfg(i64 X, i64 H, const CoefficientSeries& a, const CoefficientSeries& b) {
    SCSConfig cfg;
    cfg.X = X;
    cfg.H = H;
    cfg.series_a = &a;
    cfg.series_b = &b;
    return cfg;
}

}  // namespace

TEST_CASE("bump function") {
    CHECK(bump(1.0) == 0.0);
    CHECK(bump(2.0) == 0.0);
    CHECK(bump(0.5) == 0.0);
    CHECK(bump(1.5) == 1.0);
    CHECK(bump(1.25) == doctest::Approx(std::exp(-4.0 / 3.0)).epsilon(1e-12));
    CHECK(bump(1.25) == doctest::Approx(0.26360).epsilon(1e-4));
    // interior smoothness proxy: strictly positive and below the peak
    for (double t : {1.1, 1.3, 1.7, 1.9}) {
        CHECK(bump(t) > 0.0);
        CHECK(bump(t) < 1.0);
    }
}

TEST_CASE("degenerate count configuration") {
    i64 X = 40, H = 5;
    auto ones = CoefficientSeries::constant(1.0, 2 * X + 4 * H);
    SCSConfig cfg = make_cfg(X, H, ones, ones);
    cfg.w1 = Weight::sharp();
    cfg.w2 = Weight::sharp();
    CHECK(scs_L(cfg) == doctest::Approx(static_cast<double>(X)));
}

TEST_CASE("zero series annihilates") {
    auto zero = CoefficientSeries::constant(0.0, 300);
    SCSConfig cfg = make_cfg(50, 5, zero, zero);
    CHECK(scs_L(cfg) == 0.0);
}

TEST_CASE("preconditions") {
    auto ones = CoefficientSeries::constant(1.0, 1000);
    CHECK_THROWS_AS(scs_L(make_cfg(10, 20, ones, ones)), std::invalid_argument);
    CHECK_THROWS_AS(scs_L(make_cfg(500, 100, ones, ones)), CapExceeded);
    SCSConfig missing;
    missing.X = 10;
    missing.H = 2;
    CHECK_THROWS_AS(scs_L(missing), std::invalid_argument);
}

TEST_CASE("scs_L equals a naive double loop") {
    auto d2 = CoefficientSeries::divisor(2, 400);
    SCSConfig cfg = make_cfg(100, 10, d2, d2);
    double fast = scs_L(cfg);
    double naive = verify::scs_L_naive(cfg);
    CHECK(fast == doctest::Approx(naive).epsilon(1e-10));
    CHECK(fast > 0.0);  // nonnegative terms

    auto gl3 = CoefficientSeries::gl3(700);
    SCSConfig cfg2 = make_cfg(160, 16, gl3, d2);
    CHECK(scs_L(cfg2) == doctest::Approx(verify::scs_L_naive(cfg2)).epsilon(1e-10));
}

TEST_CASE("blocked sum is worker-count independent") {
    auto gl3 = CoefficientSeries::gl3(1300);
    SCSConfig cfg = make_cfg(300, 40, gl3, gl3);
    double w1 = scs_L(cfg, 1);
    double w4 = scs_L(cfg, 4);
    CHECK(w1 == w4);  // bitwise equal by construction
}

TEST_CASE("tau-weighted average") {
    auto gl3 = CoefficientSeries::gl3(600);
    auto tau = CoefficientSeries::tau(120);
    SCSConfig cfg = make_cfg(120, 12, gl3, gl3);
    cfg.hweight = HWeight::tau_normalized;
    cfg.hseries = &tau;
    double v = scs_D(cfg);
    CHECK(std::isfinite(v));
    auto rep = trivial_bound_report(cfg);
    CHECK(rep.value == doctest::Approx(v));
    CHECK(rep.ratio <= 1.0);
}

TEST_CASE("trivial bound ratio") {
    auto gl3 = CoefficientSeries::gl3(500);
    auto d3 = CoefficientSeries::divisor(3, 500);
    for (i64 X : {60, 100}) {
        SCSConfig cfg = make_cfg(X, X / 10, gl3, d3);
        auto rep = trivial_bound_report(cfg);
        CHECK(rep.ratio >= 0.0);
        CHECK(rep.ratio <= 1.0);
    }
    // constant series with equal weights: Cauchy-Schwarz is tight
    auto ones = CoefficientSeries::constant(1.0, 500);
    SCSConfig cfg = make_cfg(100, 10, ones, ones);
    auto rep = trivial_bound_report(cfg);
    CHECK(rep.ratio == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("weight monotonicity") {
    auto d2 = CoefficientSeries::divisor(2, 500);
    SCSConfig cfg = make_cfg(100, 10, d2, d2);
    double base = scs_L(cfg);
    for (double c : {0.9, 0.5, 0.1}) {
        SCSConfig smaller = cfg;
        smaller.w2 = Weight::smooth(c);
        CHECK(scs_L(smaller) <= base + 1e-12);
    }
}

TEST_CASE("delta crosscheck") {
    auto d2 = CoefficientSeries::divisor(2, 300);
    SCSConfig cfg = make_cfg(50, 5, d2, d2);
    CHECK(delta_crosscheck(cfg, 500));
    CHECK_THROWS_AS(delta_crosscheck(cfg, 50), ModulusTooSmall);

    // empty support: both sides zero
    auto tiny = CoefficientSeries::divisor(2, 10);
    SCSConfig empty = make_cfg(1, 1, tiny, tiny);
    CHECK(delta_crosscheck(empty, 16));
}

TEST_CASE("exponent scan") {
    auto rows = exponent_scan({200}, {0.5}, CoefficientSeries::Kind::divisor, 2,
                              CoefficientSeries::Kind::divisor, 2, HWeight::constant);
    REQUIRE(rows.size() == 1);
    CHECK(std::isnan(rows[0].slope));  // single point, regression undefined
    CHECK(rows[0].H == 15);            // ceil(200^0.5)

    auto rows2 = exponent_scan({100, 200, 400}, {0.5, 0.6}, CoefficientSeries::Kind::gl3_eisenstein,
                               3, CoefficientSeries::Kind::gl3_eisenstein, 3, HWeight::constant);
    REQUIRE(rows2.size() == 6);
    for (const auto& r : rows2) {
        CHECK(std::isfinite(r.value));
        CHECK(r.ratio <= 1.0);
        CHECK(std::isfinite(r.slope));
    }
}
