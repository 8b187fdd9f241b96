#include "doctest.h"

#include "finhilbert/inversion.hpp"
#include "finhilbert/transform.hpp"

#include <cmath>
#include <numbers>

using namespace fht;

TEST_CASE("airfoil: spectral data g(x) = -x") {
    // T(sqrt(1-t^2)) = -x, so the particular solution is T_1/(pi w) up to scale.
    const SpectralFunction g{WeightClass::Flat, {0.0, -0.5}};
    const auto sol = solve_airfoil(g, 2.0);
    const auto f = sol.spectral();
    CHECK(f.weight == WeightClass::InvSqrt);
    CHECK(sol.residual_l1 < 1e-12);
    // particular solution is the zero-mean T-hat image; c sits in the
    // homogeneous coefficient
    CHECK(f.coeffs[0] == 0.0);
    REQUIRE(f.coeffs.size() >= 3);
    CHECK(f.coeffs[2] == doctest::Approx(-0.5).epsilon(1e-12));
    CHECK(sol.homogeneous_coeff == doctest::Approx(2.0).epsilon(1e-14));

    // two solutions with distinct c share the particular part and differ
    // pointwise by (c1-c2)/sqrt(1-x^2)
    const auto sol2 = solve_airfoil(g, -1.0);
    const auto f2 = sol2.spectral();
    for (size_t i = 0; i < f.coeffs.size(); ++i)
        CHECK(f.coeffs[i] == doctest::Approx(f2.coeffs[i]).epsilon(1e-14));
    CHECK(sol.homogeneous_coeff - sol2.homogeneous_coeff ==
          doctest::Approx(3.0).epsilon(1e-14));
    for (double x : {-0.7, 0.0, 0.4}) {
        CHECK(sol(x) - sol2(x) ==
              doctest::Approx(3.0 / std::sqrt(1.0 - x * x)).epsilon(1e-12));
    }
}

TEST_CASE("airfoil: zero data yields the homogeneous solution") {
    const auto sol = solve_airfoil(SpectralFunction{WeightClass::Flat, {0.0}}, 1.0);
    const auto f = sol.spectral();
    for (double b : f.coeffs) CHECK(b == 0.0);
    CHECK(sol.homogeneous_coeff == doctest::Approx(1.0));
    CHECK(sol.residual_l1 < 1e-14);
}

TEST_CASE("airfoil: grid path on g = 1") {
    // T-hat(1) spectral image is T_1/w, so the pointwise solver should match.
    RealFunction g{[](double) { return 1.0; }, false, false};
    std::vector<double> xs = class_nodes(WeightClass::InvSqrt, 17);
    QuadratureOptions opt;
    opt.panel_depth = 60;
    const auto sol = solve_airfoil(g, xs, 0.5, opt);
    CHECK(sol.residual_l1 < 1e-6);
    // T-hat(1) = x / sqrt(1-x^2): compare the stored particular values
    const auto& grid = std::get<GridFunction>(sol.particular);
    for (size_t i = 0; i < grid.nodes.size(); ++i) {
        const double x = grid.nodes[i];
        CHECK(grid.values[i] ==
              doctest::Approx(x / std::sqrt(1.0 - x * x)).epsilon(1e-7));
    }
}

TEST_CASE("round trips are exact on spectral data") {
    const SpectralFunction g{WeightClass::Flat, {0.4, -1.2, 0.0, 0.3}};
    const auto back = fht_spectral(fht_hat(g).spectral()).spectral();
    REQUIRE(back.coeffs.size() >= g.coeffs.size());
    for (size_t i = 0; i < back.coeffs.size(); ++i) {
        const double want = i < g.coeffs.size() ? g.coeffs[i] : 0.0;
        CHECK(back.coeffs[i] == doctest::Approx(want).epsilon(1e-15));
    }

    const SpectralFunction f{WeightClass::InvSqrt, {0.7, 0.2, -0.5, 0.1}};
    const auto rec = fht_hat(fht_spectral(f).spectral()).spectral();
    CHECK(rec.coeffs[0] == 0.0);  // recovery up to the kernel component
    for (size_t i = 1; i < f.coeffs.size(); ++i)
        CHECK(rec.coeffs[i] == doctest::Approx(f.coeffs[i]).epsilon(1e-15));
}

TEST_CASE("range check accepts smooth data") {
    const SpectralFunction g{WeightClass::Flat, {1.0, 0.5, 0.0, 0.25}};
    const auto ev = range_check(g);
    CHECK(ev.in_range_evidence);
    CHECK_FALSE(ev.out_of_range_evidence);
    CHECK(ev.roundtrip_residual < 1e-8);
    CHECK(ev.growth_ratio < 1.02);
}

TEST_CASE("optimal-domain diagnostic") {
    SUBCASE("bounded integrable f: no growth flag") {
        const RealFunction f = as_real_function(SpectralFunction{WeightClass::Sqrt, {1.0}});
        const auto diag = optimal_domain_diag(f, 6, {});
        CHECK(diag.catalogue_depth == 6);
        CHECK_FALSE(diag.growth_flag);
        CHECK(diag.sup_lower_bound > 0.0);
        CHECK(diag.skipped_sets == 0);
    }
    SUBCASE("zero function") {
        RealFunction z{[](double) { return 0.0; }, false, false};
        const auto diag = optimal_domain_diag(z, 4, {});
        CHECK(diag.sup_lower_bound == 0.0);
        CHECK_FALSE(diag.growth_flag);
    }
    SUBCASE("depth guard") {
        RealFunction z{[](double) { return 0.0; }, false, false};
        CHECK_THROWS_AS(optimal_domain_diag(z, 13, {}), std::invalid_argument);
    }
}

TEST_CASE("parseval pairing residuals") {
    // <T f, g> + <f, T-hat g> = 0 on spectral pairs
    const SpectralFunction f{WeightClass::InvSqrt, {0.0, 1.0}};
    const SpectralFunction g{WeightClass::Flat, {1.0, 0.5}};
    CHECK(parseval_residual(f, g) < 1e-6);

    const SpectralFunction arcsine{WeightClass::InvSqrt, {1.0}};
    const SpectralFunction u1{WeightClass::Flat, {0.0, 1.0}};
    CHECK(parseval_residual(arcsine, u1) < 1e-6);
}
