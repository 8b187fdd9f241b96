#pragma once

#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace fht {

// Endpoint weight prefactor attached to a Chebyshev series.
//   InvSqrt : (1-x^2)^{-1/2} times a Chebyshev-T series
//   Flat    : a Chebyshev-U series (no prefactor)
//   Sqrt    : (1-x^2)^{+1/2} times a Chebyshev-U series
// These three classes close the finite Hilbert transform algebra:
// InvSqrt -> Flat and Sqrt -> Flat under T, Flat -> InvSqrt under T-hat.
enum class WeightClass { InvSqrt, Flat, Sqrt };

std::string weight_name(WeightClass w);           // "inv_sqrt" | "flat_u" | "sqrt_u"
WeightClass weight_from_name(const std::string&);

struct SpectralFunction {
    WeightClass weight = WeightClass::Flat;
    std::vector<double> coeffs;  // length >= 1, all finite

    double operator()(double x) const;
};

enum class NodeKind { ChebyshevGauss, Uniform, Custom };

struct GridFunction {
    std::vector<double> nodes;   // strictly increasing, inside (-1,1)
    std::vector<double> values;  // same length
    NodeKind kind = NodeKind::Custom;
};

// Clenshaw evaluation of the weighted series at interior points.
// Throws std::domain_error for |x| >= 1.
double evaluate(const SpectralFunction& f, double x);
std::vector<double> evaluate(const SpectralFunction& f, std::span<const double> xs);

// The n Chebyshev-Gauss nodes matching the class basis (first kind for
// InvSqrt, second kind for Flat/Sqrt), in increasing order.
std::vector<double> class_nodes(WeightClass w, int n);

// Interpolation of samples/prefactor in the class basis via discrete
// orthogonality.  Samples must sit at class_nodes(weight, n).
SpectralFunction fit(const GridFunction& samples, WeightClass weight, int n);

GridFunction to_grid(const SpectralFunction& f, std::span<const double> nodes);

// Drop trailing coefficients below `eps` in magnitude (always keeps one).
void trim_coeffs(std::vector<double>& coeffs, double eps = 0.0);

// A sampled real function on (-1,1) with declared endpoint singularities;
// the uniform carrier for quadrature-path operations.
struct RealFunction {
    std::function<double(double)> eval;
    bool singular_left = false;
    bool singular_right = false;

    double operator()(double x) const { return eval(x); }
};

RealFunction as_real_function(const SpectralFunction& f);
// Piecewise-linear interpolant, constant extrapolation beyond the node range.
RealFunction as_real_function(const GridFunction& g);

}  // namespace fht
