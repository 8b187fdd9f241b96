#include "doctest.h"

#include "finhilbert/transform.hpp"

#include <cmath>
#include <numbers>
#include <random>

using namespace fht;

namespace {
double rand_unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53 * 2.0 - 1.0;
}

const std::vector<double> kProbe = class_nodes(WeightClass::InvSqrt, 21);
}  // namespace

TEST_CASE("spectral closure: kernel, -x, and T_2/w -> U_1") {
    // arcsine density is annihilated
    const auto zero = fht_spectral({WeightClass::InvSqrt, {1.0}}).spectral();
    CHECK(zero.weight == WeightClass::Flat);
    for (double c : zero.coeffs) CHECK(c == 0.0);

    // T(sqrt(1-t^2)) = -x
    const auto mx = fht_spectral({WeightClass::Sqrt, {1.0}}).spectral();
    for (double x : kProbe) CHECK(evaluate(mx, x) == doctest::Approx(-x).epsilon(1e-14));

    // T(T_2/w) = U_1 = 2x
    const auto u1 = fht_spectral({WeightClass::InvSqrt, {0.0, 0.0, 1.0}}).spectral();
    for (double x : kProbe) CHECK(evaluate(u1, x) == doctest::Approx(2.0 * x).epsilon(1e-14));

    CHECK_THROWS_AS(fht_spectral({WeightClass::Flat, {1.0}}), std::invalid_argument);
}

TEST_CASE("quadrature closed forms: T(1) and an indicator") {
    RealFunction one;
    one.eval = [](double) { return 1.0; };
    // T(1)(x) = (1/pi) log((1-x)/(1+x)) in this orientation
    CHECK(fht_point(one, 0.5) ==
          doctest::Approx(std::log(1.0 / 3.0) / std::numbers::pi).epsilon(1e-10));
    CHECK(std::abs(fht_point(one, 0.0)) < 1e-12);

    RealFunction chi;
    chi.eval = [](double t) { return (t > 0.0 && t < 0.5) ? 1.0 : 0.0; };
    QuadratureOptions opt;
    opt.interior_singularities = {0.0, 0.5};
    // x outside the support: (1/pi) log|(b-x)/(a-x)|
    CHECK(fht_point(chi, -0.5, opt) ==
          doctest::Approx(std::log(2.0) / std::numbers::pi).epsilon(1e-9));
    CHECK_THROWS_AS(fht_point(one, 1.0), std::domain_error);
}

TEST_CASE("oracle equivalence: spectral vs quadrature on random series") {
    std::mt19937_64 rng(99);
    for (WeightClass w : {WeightClass::InvSqrt, WeightClass::Sqrt}) {
        for (int rep = 0; rep < 3; ++rep) {
            SpectralFunction f;
            f.weight = w;
            const int n = 2 + static_cast<int>(rng() % 15);
            for (int i = 0; i < n; ++i) f.coeffs.push_back(rand_unit(rng));
            const auto exact = fht_spectral(f).spectral();
            const RealFunction fr = as_real_function(f);
            QuadratureOptions deep;
            deep.panel_depth = 60;
            for (double x : kProbe)
                CHECK(std::abs(fht_point(fr, x, deep) - evaluate(exact, x)) < 1e-7);
        }
    }
}

TEST_CASE("kernel family: quadrature path is numerically zero") {
    for (double c : {1.0, -3.7}) {
        const SpectralFunction f{WeightClass::InvSqrt, {c}};
        const RealFunction fr = as_real_function(f);
        QuadratureOptions deep;
        deep.panel_depth = 60;
        double l1 =
            integrate([&](double x) { return std::abs(fht_point(fr, x, deep)); }, -1.0, 1.0,
                      {-1.0, 1.0}, PanelScheme{20, 16});
        CHECK(l1 < 1e-8);
    }
}

TEST_CASE("spectral output vanishes iff InvSqrt input is kernel-only") {
    const auto z = fht_spectral({WeightClass::InvSqrt, {2.5}}).spectral();
    for (double c : z.coeffs) CHECK(c == 0.0);
    const auto nz = fht_spectral({WeightClass::InvSqrt, {2.5, 0.0, 1e-9}}).spectral();
    double mass = 0.0;
    for (double c : nz.coeffs) mass += std::abs(c);
    CHECK(mass > 0.0);
}

TEST_CASE("linearity of the spectral path") {
    std::mt19937_64 rng(7);
    SpectralFunction f{WeightClass::InvSqrt, {}}, g{WeightClass::InvSqrt, {}};
    for (int i = 0; i < 6; ++i) f.coeffs.push_back(rand_unit(rng));
    for (int i = 0; i < 6; ++i) g.coeffs.push_back(rand_unit(rng));
    SpectralFunction h{WeightClass::InvSqrt, {}};
    const double a = 2.5, b = -1.25;
    for (int i = 0; i < 6; ++i) h.coeffs.push_back(a * f.coeffs[i] + b * g.coeffs[i]);
    const auto th = fht_spectral(h).spectral();
    const auto tf = fht_spectral(f).spectral();
    const auto tg = fht_spectral(g).spectral();
    for (size_t i = 0; i < th.coeffs.size(); ++i)
        CHECK(std::abs(th.coeffs[i] - (a * tf.coeffs[i] + b * tg.coeffs[i])) < 1e-10);
}

TEST_CASE("T-hat: spectral rule and zero mean") {
    const auto h = fht_hat(SpectralFunction{WeightClass::Flat, {1.0}}).spectral();
    CHECK(h.weight == WeightClass::InvSqrt);
    REQUIRE(h.coeffs.size() == 2);
    CHECK(h.coeffs[0] == 0.0);
    CHECK(h.coeffs[1] == 1.0);

    std::mt19937_64 rng(3);
    for (int rep = 0; rep < 5; ++rep) {
        SpectralFunction g{WeightClass::Flat, {}};
        for (int i = 0; i < 2 + static_cast<int>(rng() % 6); ++i)
            g.coeffs.push_back(rand_unit(rng));
        const auto hat = fht_hat(g).spectral();
        CHECK(hat.coeffs[0] == 0.0);  // zero T_0 component <=> zero mean
        const RealFunction hr = as_real_function(hat);
        const double mean =
            integrate(hr.eval, -1.0, 1.0, {-1.0, 1.0}, PanelScheme{60, 16, true});
        CHECK(std::abs(mean) < 1e-8);
    }

    // quadrature path agrees with the spectral rule
    const RealFunction one{[](double) { return 1.0; }, false, false};
    for (double x : {-0.6, 0.0, 0.3, 0.8})
        CHECK(fht_hat_point(one, x) ==
              doctest::Approx(x / std::sqrt(1.0 - x * x)).epsilon(1e-8));
}

TEST_CASE("T(t f(t))(x) = (1/pi) int f + x T(f)(x)") {
    std::mt19937_64 rng(23);
    SpectralFunction f{WeightClass::InvSqrt, {}};
    for (int i = 0; i < 5; ++i) f.coeffs.push_back(rand_unit(rng));
    const auto tf = fht_spectral(f).spectral();
    const double mean = f.coeffs[0];  // (1/pi) int f for InvSqrt
    RealFunction tf_times;
    tf_times.eval = [f](double t) { return t * evaluate(f, t); };
    tf_times.singular_left = tf_times.singular_right = true;
    for (double x : {-0.7, -0.2, 0.4, 0.85})
        CHECK(std::abs(fht_point(tf_times, x) - (mean + x * evaluate(tf, x))) < 1e-7);
}

TEST_CASE("projection P") {
    const auto p1 = project_P(SpectralFunction{WeightClass::InvSqrt, {1.0}});
    CHECK(p1.coeffs[0] == 1.0);  // identity on the kernel
    const auto p2 = project_P(SpectralFunction{WeightClass::Sqrt, {1.0}});
    CHECK(p2.coeffs[0] == doctest::Approx(0.5).epsilon(1e-14));
    const auto p3 = project_P(project_P(SpectralFunction{WeightClass::Flat, {0.3, 0.2, 0.7}}));
    const auto p4 = project_P(SpectralFunction{WeightClass::Flat, {0.3, 0.2, 0.7}});
    CHECK(p3.coeffs[0] == doctest::Approx(p4.coeffs[0]).epsilon(1e-14));
}

TEST_CASE("fht_poly matches quadrature for a cubic") {
    const std::vector<double> q = {0.5, -1.0, 0.25, 2.0};
    const auto form = fht_poly(q);
    RealFunction f;
    f.eval = [&q](double t) { return ((q[3] * t + q[2]) * t + q[1]) * t + q[0]; };
    for (double x : {-0.8, -0.3, 0.1, 0.6, 0.9})
        CHECK(form(x) == doctest::Approx(fht_point(f, x)).epsilon(1e-9));
}

TEST_CASE("u_series_to_monomials: U_2 = 4x^2 - 1") {
    const auto m = u_series_to_monomials(std::vector<double>{0.0, 0.0, 1.0});
    REQUIRE(m.size() == 3);
    CHECK(m[0] == -1.0);
    CHECK(m[1] == 0.0);
    CHECK(m[2] == 4.0);
}

TEST_CASE("calderon domination: finite stable sup, no violation") {
    RealFunction one{[](double) { return 1.0; }, false, false};
    const double ts[] = {0.05, 0.2, 0.5, 1.0, 1.5};
    const auto rep = calderon_domination(one, ts, 256, {});
    CHECK_FALSE(rep.violation);
    CHECK(std::isfinite(rep.sup_ratio));
    CHECK(rep.sup_ratio > 0.0);
    CHECK(std::abs(rep.sup_ratio - rep.sup_ratio_coarse) <= 0.1 * rep.sup_ratio);

    RealFunction zero{[](double) { return 0.0; }, false, false};
    const auto rz = calderon_domination(zero, ts, 64, {});
    CHECK(rz.sup_ratio == 0.0);
    CHECK_FALSE(rz.violation);
}
