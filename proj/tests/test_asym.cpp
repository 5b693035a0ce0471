#include "doctest.h"

#include <cmath>

#include "humbert/asym.hpp"
#include "humbert/errors.hpp"
#include "humbert/laplace.hpp"
#include "humbert/series.hpp"
#include "humbert/specials.hpp"

using namespace humbert;

namespace {

double rel(double a, double b) {
    if (a == 0.0 && b == 0.0) return 0.0;
    return std::fabs(a - b) / std::max(std::fabs(a), std::fabs(b));
}

} // namespace

TEST_CASE("regime selection") {
    CHECK(phi2_asym(1, 1, 3, 1.0, 1.0, 10.0).regime.guard == "x > 0, y > 0");
    CHECK(phi2_asym(1, 1, 3, -1.0, -1.0, 10.0).regime.branch == 6);
    CHECK(phi2_asym(1, 1, 3, -2.0, -1.0, 10.0).regime.branch == 4);
    CHECK(phi2_asym(1, 1, 3, -1.0, -2.0, 10.0).regime.branch == 5);
    CHECK(phi3_asym(1, 2, 2.0, -1.0, 10.0).regime.guard == "x > 0, y < 0");
    CHECK(xi2_asym(2, 1, 2.5, 0.8, 1.0, 10.0).regime.guard == "y > 0, alpha > beta");
    CHECK(phi3i_asym(1.5, 1.5, 1.0, 1.0, 10.0).regime.guard == "y > 0, beta+gamma > 3/2");
    CHECK(phi3i_asym(0.25, 1.0, 1.0, 1.0, 10.0).regime.branch == 2);
    // guards
    CHECK_THROWS_AS(phi2_asym(1, 1, 3, 0.0, 1.0, 10.0), RegimeError);
    CHECK_THROWS_AS(xi2_asym(1, 1, 2, -1.0, 1.0, 10.0), RegimeError);
    CHECK_THROWS_AS(phi2_asym(1, 1, 2, 1.0, 1.0, 10.0), ParameterPole); // gamma-b-b' = 0
    CHECK_THROWS_AS(phi3i_asym(0.75, 0.75, 1.0, 1.0, 10.0), RegimeError); // beta+gamma = 3/2
    CHECK_THROWS_AS(phi2i_asym(2.0, 1.0, 3.0, 2.0, 1.0, 10.0), ParameterPole); // 1-beta = -1
    CHECK_THROWS_AS(phi2i_asym(0.5, 0.5, 2.0, 1.0, 1.0, 10.0), RegimeError);   // x = y
}

TEST_CASE("formula arithmetic spot checks") {
    // Phi2 first branch at beta=beta'=1, gamma=3, x=y=1: 2 t^-2
    AsymValue a = phi2_asym(1, 1, 3, 1, 1, 1e3);
    CHECK(rel(a.value.real_value(), 2e-6) < 1e-12);
    // Xi2 alpha<beta printed prefactor Gamma(1)Gamma(1)/Gamma(2) = 1 at (1,2):
    // value equals the bare Bessel-envelope product
    {
        double t = 50.0, x = 1.0, y = 1.0, g = 2.5;
        AsymValue v = xi2_asym(1.0, 2.0, g, x, y, t, Variant::Printed);
        double nu = g - 1.0 - 1.0;
        double envelope = std::pow(t * x, -1.0) * std::pow(t * y, -0.5 * (g - 1.0 - 1.0)) *
                          bessel(BesselKind::J, nu, 2.0 * std::sqrt(y * t)).value;
        CHECK(rel(v.value.value, envelope) < 1e-12);
    }
    // Phi3i y<0 printed arithmetic at (beta,gamma,x,|y|,t) = (1,1,1,1,100):
    // Gamma(1)/(2 sqrt(pi)) * 100^(1/4) * 100^-1 * e^20
    {
        AsymValue v = phi3i_asym(1.0 + 1e-9, 1.0, 1.0, -1.0, 100.0, Variant::Printed);
        double mant = 1.0 / (2.0 * std::sqrt(M_PI)) * std::pow(100.0, 0.25) / 100.0;
        CHECK(rel(v.value.value, mant) < 1e-6);
        CHECK(v.value.log_scale == doctest::Approx(20.0));
    }
    // Phi3 at beta=gamma: J order reduces to -1; J_{-1} = -J_1
    {
        AsymValue v = phi3_asym(2.0, 2.0, 1.0, 1.0, 25.0);
        double z = 2.0 * std::sqrt(25.0);
        double expect = gamma_fn(2.0) * std::pow(25.0, -2.0) * std::pow(25.0, 0.5) *
                        (-bessel(BesselKind::J, 1.0, z).value);
        CHECK(rel(v.value.value, expect) < 1e-10);
    }
    // Phi2i permutation symmetry is structural
    {
        AsymValue lhs = phi2i_asym(0.5, 1.5, 2.5, 1.0, 2.0, 100.0);
        AsymValue rhs = phi2i_asym(1.5, 0.5, 2.5, 2.0, 1.0, 100.0);
        CHECK(lhs.value.value == rhs.value.value);
    }
}

TEST_CASE("Theorem 1 permutation identity between branches 4 and 5") {
    // value(b, b', x, y) with x<y<0 equals value(b', b, y, x) exactly
    double b = 0.7, bp = 1.3, g = 2.6, t = 37.0;
    AsymValue v4 = phi2_asym(b, bp, g, -2.0, -1.0, t);
    AsymValue v5 = phi2_asym(bp, b, g, -1.0, -2.0, t);
    CHECK(v4.regime.branch == 4);
    CHECK(v5.regime.branch == 5);
    CHECK(v4.value.value == v5.value.value);
    CHECK(v4.value.log_scale == v5.value.log_scale);
}

TEST_CASE("ratio probe: Phi2 leading branch converges") {
    ParamSet p = ParamSet::phi2(0.5, 0.5, 2.0);
    RatioProbe probe = ratio_probe(p, 1.0, 1.0, {10.0, 100.0, 1000.0});
    REQUIRE(probe.valid[0]);
    REQUIRE(probe.valid[2]);
    CHECK(probe.trend_defined);
    CHECK(probe.trend < 0.0);
    CHECK(std::fabs(probe.ratios[2] - 1.0) < 0.05);
    std::string csv = probe.to_csv();
    CHECK(csv.find("t,exact,asym,ratio,branch") == 0);
}

TEST_CASE("ratio probe: exponential branches and the sign question") {
    // corrected growth sign: ratio -> 1; printed (decaying) sign: ratio explodes
    ParamSet p = ParamSet::phi3(1.0, 2.5);
    RatioProbe good = ratio_probe(p, -1.0, 1.0, {5.0, 15.0, 40.0}, ExactRoute::ILT,
                                  Variant::Corrected);
    REQUIRE(good.valid[2]);
    CHECK(std::fabs(good.ratios[2] - 1.0) < 0.2);
    CHECK(good.trend < 0.0);
    RatioProbe bad = ratio_probe(p, -1.0, 1.0, {5.0, 15.0, 40.0}, ExactRoute::ILT,
                                 Variant::Printed);
    // exact/printed ~ e^{2|x|t}: far from 1 and growing
    REQUIRE(bad.valid[2]);
    CHECK(std::fabs(bad.ratios[2] - 1.0) > 1e3);
    CHECK(bad.trend > 0.0);
}

TEST_CASE("ratio probe: Theorem 3 prefactor variants") {
    // (alpha,beta,gamma) = (2,1,3.5): the two variants differ by exactly
    // Gamma(gamma)/Gamma(alpha) = 3.32335...; the corrected one trends to 1
    ParamSet p = ParamSet::xi2(2.0, 1.0, 3.5);
    // J_{gamma-beta-1} envelope: probe on its antinodes
    std::vector<double> grid = antinode_grid_j(3.5 - 1.0 - 1.0, 1.0, {25.0, 100.0, 400.0, 1600.0});
    RatioProbe corr = ratio_probe(p, 0.8, 1.0, grid, ExactRoute::Euler, Variant::Corrected);
    RatioProbe prin = ratio_probe(p, 0.8, 1.0, grid, ExactRoute::Euler, Variant::Printed);
    REQUIRE(corr.valid[3]);
    REQUIRE(prin.valid[3]);
    CHECK(std::fabs(corr.ratios[3] - 1.0) < 0.25);
    CHECK(corr.trend < 0.0);
    CHECK(rel(prin.ratios[3] / corr.ratios[3], gamma_fn(3.5) / gamma_fn(2.0)) < 1e-10);
    CHECK(std::fabs(prin.ratios[3] - 1.0) > 1.0);
}

TEST_CASE("ratio probe: Theorem 4 algebraic branch variants") {
    ParamSet p = ParamSet::phi3i(1.5, 1.5, 1.0);
    std::vector<double> grid{50.0, 200.0, 800.0};
    RatioProbe corr = ratio_probe(p, 1.0, 1.0, grid, ExactRoute::Auto, Variant::Corrected);
    RatioProbe prin = ratio_probe(p, 1.0, 1.0, grid, ExactRoute::Auto, Variant::Printed);
    REQUIRE(corr.valid[2]);
    REQUIRE(prin.valid[2]);
    CHECK(std::fabs(corr.ratios[2] - 1.0) < 0.1);
    CHECK(std::fabs(prin.ratios[2] - 1.0) > 0.2); // missing e^(y/x) factor shows up
}

TEST_CASE("ratio probe: degenerate grid") {
    ParamSet p = ParamSet::phi2(0.5, 0.5, 2.0);
    RatioProbe probe = ratio_probe(p, 1.0, 1.0, {100.0});
    CHECK(!probe.trend_defined);
}

TEST_CASE("Theorem 5 against the oracle at moderate t") {
    // [DERIVED] (0.5, 0.5, 2), x=2, y=1: ratio within 10% at t = 1000
    ParamSet p = ParamSet::phi2i(0.5, 0.5, 2.0, 1.0);
    RatioProbe probe = ratio_probe(p, 2.0, 1.0, {1000.0}, ExactRoute::WIntegral);
    REQUIRE(probe.valid[0]);
    CHECK(std::fabs(probe.ratios[0] - 1.0) < 0.1);
}

TEST_CASE("Xi2 log-branch terms are exposed") {
    Xi2LogTerms lt = xi2_log_branch_terms(1.0, 2.0, 1.0, 1.0, 100.0);
    CHECK(lt.half_log_tx == doctest::Approx(0.5 * std::log(100.0)));
    CHECK(lt.log_x_over_y == doctest::Approx(0.0));
    CHECK(lt.psi_plus_2ce == doctest::Approx(-kEulerGamma + 2 * kEulerGamma));
    // x = y keeps the ambiguous ln(x/y) term silent; probe drifts slowly to 1
    ParamSet p = ParamSet::xi2(1.0, 1.0, 2.0);
    RatioProbe probe = ratio_probe(p, 1.0, 1.0, antinode_grid_j(0.0, 1.0, {100.0, 400.0, 1600.0}),
                                   ExactRoute::Euler);
    REQUIRE(probe.valid[2]);
    CHECK(probe.trend_defined);
    CHECK(probe.trend < 0.0);
}
