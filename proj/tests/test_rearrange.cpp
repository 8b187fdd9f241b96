#include "doctest.h"

#include "finhilbert/quadrature.hpp"
#include "finhilbert/rearrange.hpp"

#include <cmath>
#include <numbers>

using namespace fht;

namespace {

RealFunction constant(double c) {
    RealFunction f;
    f.eval = [c](double) { return c; };
    return f;
}

RealFunction indicator(double a, double b) {
    RealFunction f;
    f.eval = [a, b](double x) { return (x > a && x < b) ? 1.0 : 0.0; };
    return f;
}

}  // namespace

TEST_CASE("constant function rearranges to itself; L log L = 4 closed form") {
    const auto p = rearrangement(constant(1.0), 4096);
    CHECK(profile_value(p, 0.3) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(profile_value(p, 1.9) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(norm_l1(p) == doctest::Approx(2.0).epsilon(1e-13));
    CHECK(std::abs(norm_llogl(p) - 4.0) < 1e-10);
    CHECK(norm_lp(p, 2.0) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
}

TEST_CASE("indicator of (0,1/2) rearranges to the leading interval") {
    const auto p = rearrangement(indicator(0.0, 0.5), 4096);
    CHECK(profile_value(p, 0.25) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(profile_value(p, 0.75) == doctest::Approx(0.0));
    // Phi(1/2) = (1/2) log 4 + 1
    CHECK(std::abs(norm_llogl(p) - (0.5 * std::log(4.0) + 1.0)) < 1e-9);
}

TEST_CASE("zero profile has zero norms") {
    const auto p = rearrangement(constant(0.0), 64);
    CHECK(norm_l1(p) == 0.0);
    CHECK(norm_llogl(p) == 0.0);
    CHECK(norm_llogl_alpha(p, 2.0) == 0.0);
}

TEST_CASE("arcsine density: exact rearrangement 2/sqrt(t(4-t)) within 1%") {
    RealFunction f;
    f.eval = [](double x) { return 1.0 / std::sqrt((1.0 - x) * (1.0 + x)); };
    f.singular_left = f.singular_right = true;
    const auto p = rearrangement(f, 4096);
    for (double t : {0.1, 0.5, 1.0, 1.5, 1.9}) {
        const double exact = 2.0 / std::sqrt(t * (4.0 - t));
        CHECK(std::abs(profile_value(p, t) - exact) / exact < 0.01);
    }
    // the simple upper form 2/sqrt(t) dominates the exact profile
    for (double t : {0.1, 0.5, 1.0, 1.5, 1.9})
        CHECK(profile_value(p, t) <= 2.0 / std::sqrt(t) * 1.01);
    // weak-L^2 quasi-norm of the continuum profile is sqrt(2) (at t = 2), but
    // the step profile stores cell means, and near the 1/sqrt(t) blow-up the
    // first cell's mean evaluated at its right edge pushes the discrete sup
    // toward 2 = lim sup t^(1/2) * (cell mean of 2/sqrt(s) on [0,t]).
    const double wq = weak_quasi(p, 2.0);
    CHECK(wq >= std::sqrt(2.0) * 0.99);
    CHECK(wq <= 2.0 * 1.01);
}

TEST_CASE("norm chain l1 <= llogl <= lloglsq") {
    RealFunction f;
    f.eval = [](double x) { return std::exp(x) * (1.5 + std::sin(5.0 * x)); };
    for (int res : {256, 1024}) {
        const auto p = rearrangement(f, res);
        const double l1 = norm_l1(p);
        const double ll = norm_llogl(p);
        const double ll2 = norm_llogl_alpha(p, 2.0);
        CHECK(l1 <= ll);
        CHECK(ll <= ll2);
    }
}

TEST_CASE("L(log L)^2 of an indicator matches a brute-force integral oracle") {
    const auto p = rearrangement(indicator(0.0, 0.5), 4096);
    const double oracle = integrate(
        [](double t) {
            const double l = std::log(2.0 * std::numbers::e / t);
            return l * l;
        },
        0.0, 0.5, {0.0}, PanelScheme{48, 16});
    CHECK(norm_llogl_alpha(p, 2.0) == doctest::Approx(oracle).epsilon(1e-6));
}

TEST_CASE("equimeasurability: cell means preserve the integral") {
    RealFunction f;
    f.eval = [](double x) { return 1.0 + 0.5 * std::sin(3.0 * x) + 0.25 * x * x; };
    const auto p = rearrangement(f, 4096);
    const double direct = integrate([&](double x) { return std::abs(f(x)); }, -1.0, 1.0, {});
    CHECK(std::abs(norm_l1(p) - direct) / direct < 1e-8);
}

TEST_CASE("rearrangement is positively homogeneous at profile level") {
    RealFunction f;
    f.eval = [](double x) { return std::cos(2.0 * x) + 1.2; };
    RealFunction g;
    g.eval = [f](double x) { return 3.0 * f(x); };
    const auto pf = rearrangement(f, 512);
    const auto pg = rearrangement(g, 512);
    for (size_t i = 0; i < pf.levels.size(); ++i)
        CHECK(pg.levels[i] == doctest::Approx(3.0 * pf.levels[i]).epsilon(1e-12));
}

TEST_CASE("calderon operator closed forms and monotonicity") {
    const auto ones = rearrangement(constant(1.0), 64);
    CHECK(calderon(ones, 1.0) == doctest::Approx(1.0 + std::log(2.0)).epsilon(1e-12));
    CHECK(calderon(ones, 2.0 - 1e-12) == doctest::Approx(1.0).epsilon(1e-9));
    CHECK_THROWS_AS(calderon(ones, 2.5), std::domain_error);

    const auto twos = rearrangement(constant(2.0), 64);
    for (double t : {0.25, 0.5, 1.0, 1.5})
        CHECK(calderon(twos, t) == doctest::Approx(2.0 * calderon(ones, t)).epsilon(1e-12));

    const auto ind = rearrangement(indicator(0.0, 0.5), 64);  // g* <= f* = 1*
    for (double t : {0.25, 0.5, 1.0, 1.5}) CHECK(calderon(ind, t) <= calderon(ones, t) + 1e-12);
}

TEST_CASE("norm preconditions") {
    const auto p = rearrangement(constant(1.0), 64);
    CHECK_THROWS_AS(norm_llogl_alpha(p, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(norm_lp(p, 0.9), std::invalid_argument);
    CHECK_THROWS_AS(weak_quasi(p, 0.5), std::invalid_argument);
    RealFunction f = constant(1.0);
    CHECK_THROWS_AS(rearrangement(f, 4), std::invalid_argument);
}

TEST_CASE("norm_report collects the requested functionals") {
    const auto p = rearrangement(constant(1.0), 64);
    const double ps[] = {2.0};
    const auto r = norm_report(p, ps, ps);
    CHECK(r.l1 == doctest::Approx(2.0));
    CHECK(r.llogl == doctest::Approx(4.0));
    REQUIRE(r.lp.size() == 1);
    CHECK(r.lp[0].second == doctest::Approx(std::sqrt(2.0)));
    REQUIRE(r.weak.size() == 1);
    CHECK(r.weak[0].second == doctest::Approx(std::sqrt(2.0)));
}
