#pragma once

#include "finhilbert/chebyshev.hpp"
#include "finhilbert/quadrature.hpp"
#include "finhilbert/rearrange.hpp"

#include <optional>
#include <variant>
#include <vector>

namespace fht {

// T(f)(x) = (1/pi) p.v. int_{-1}^{1} f(t)/(t-x) dt  (Tricomi's orientation:
// T(1/sqrt(1-t^2)) = 0, T(sqrt(1-t^2))(x) = -x,
// T(1)(x) = (1/pi) log((1-x)/(1+x))).

enum class TransformMethod { Spectral, Quadrature };

struct TransformResult {
    std::variant<SpectralFunction, GridFunction> output;
    TransformMethod method = TransformMethod::Spectral;
    std::optional<double> residual_meta;  // cross-check discrepancy, when computed

    // Ref-qualified: calling through a temporary moves the payload out
    // instead of handing back a reference into a dead object.
    const SpectralFunction& spectral() const& { return std::get<SpectralFunction>(output); }
    SpectralFunction spectral() && { return std::get<SpectralFunction>(std::move(output)); }
    const GridFunction& grid() const& { return std::get<GridFunction>(output); }
    GridFunction grid() && { return std::get<GridFunction>(std::move(output)); }
};

// Exact coefficient rules:
//   InvSqrt (a_0,a_1,...) -> Flat (a_1,a_2,...)      [T(T_n/w) = U_{n-1}, a_0 annihilated]
//   Sqrt    (b_0,b_1,...) -> Flat, -sum b_m T_{m+1} re-expanded in U
// Flat input is unsupported (use fht_quadrature).
TransformResult fht_spectral(const SpectralFunction& f);

struct QuadratureOptions {
    int panel_depth = 40;
    int panel_points = 16;
    std::vector<double> interior_singularities;  // refinement/split points of f
};

// Principal value by singularity subtraction:
//   T(f)(x) = (1/pi) int (f(t)-f(x))/(t-x) dt + (f(x)/pi) log((1-x)/(1+x))
// with the regular integral on dyadic panels refined toward x, +-1 and any
// declared singular points of f.
double fht_point(const RealFunction& f, double x, const QuadratureOptions& opt = {});
TransformResult fht_quadrature(const RealFunction& f, std::span<const double> xs,
                               const QuadratureOptions& opt = {});

// T-hat(g)(x) = -(1/w(x)) T(w g)(x), w = sqrt(1-x^2).
// Spectral rule: Flat (b_0,b_1,...) -> InvSqrt (0,b_0,b_1,...).
TransformResult fht_hat(const SpectralFunction& g);
double fht_hat_point(const RealFunction& g, double x, const QuadratureOptions& opt = {});
TransformResult fht_hat(const RealFunction& g, std::span<const double> xs,
                        const QuadratureOptions& opt = {});

// P(f) = ((1/pi) int f) / sqrt(1-x^2); identity on the kernel of T.
SpectralFunction project_P(const SpectralFunction& f);
SpectralFunction project_P(const RealFunction& f, const QuadratureOptions& opt = {});

// T of a polynomial, in closed form:
//   T(q)(x) = R(x) + q(x) * (1/pi) log((1-x)/(1+x))
// with R(x) = (1/pi) int (q(t)-q(x))/(t-x) dt a polynomial.
struct PolyLogForm {
    std::vector<double> poly;      // monomial coefficients of R
    std::vector<double> logcoef;   // monomial coefficients of q (multiplies the log term)

    double operator()(double x) const;
};
PolyLogForm fht_poly(std::span<const double> monomial_coeffs);

// Monomial coefficients of a Flat U-series (polynomial).
std::vector<double> u_series_to_monomials(std::span<const double> ucoeffs);

// Calderon domination report: ratios (Tf)*(t) / S(f*)(t) over a t-grid at
// two grid resolutions; the theoretical constant is never asserted, only
// the empirical sup and its stability across resolutions are reported.
struct DominationReport {
    std::vector<double> ts;
    std::vector<double> ratios;        // at `resolution`
    double sup_ratio = 0.0;
    double sup_ratio_coarse = 0.0;     // at resolution/2
    bool violation = false;            // S(f*) = 0 with (Tf)* > 0 somewhere
};

DominationReport calderon_domination(const RealFunction& f, std::span<const double> ts,
                                     int resolution = 1024,
                                     const QuadratureOptions& opt = {});

}  // namespace fht
