#pragma once

#include <functional>
#include <span>
#include <vector>

namespace fht {

enum class RuleKind { GaussLegendre, GaussChebyshevT, GaussChebyshevU };

// Nodes strictly inside (-1,1), positive weights.  The weight measure is
// dx for GaussLegendre, dx/sqrt(1-x^2) for GaussChebyshevT and
// sqrt(1-x^2) dx for GaussChebyshevU.
struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;
    RuleKind kind = RuleKind::GaussLegendre;
};

QuadratureRule quad_rule(RuleKind kind, int n);

// Composite Gauss-Legendre integrator on [a,b] with dyadic panel
// refinement toward a declared list of integrable singular points
// (interior points split the interval; endpoint singularities get a
// geometric panel cascade).  Values inside the innermost panel next to a
// singular point are never sampled closer than (b-a)*2^-depth.
struct PanelScheme {
    int depth = 40;       // dyadic refinement levels toward each singular point
    int points = 16;      // Gauss-Legendre points per panel
    // When set, the cascade toward a singular *segment end* runs in the
    // substituted variable s = sqrt(|t - end|).  This removes square-root
    // endpoint singularities exactly and shrinks the truncated tail of any
    // milder one far below the plain dyadic floor, at the same node budget.
    bool sqrt_edge = false;
};

double integrate(const std::function<double(double)>& f, double a, double b,
                 std::span<const double> singular_points = {},
                 const PanelScheme& scheme = {});

inline double integrate(const std::function<double(double)>& f, double a, double b,
                        std::initializer_list<double> singular_points,
                        const PanelScheme& scheme = {}) {
    return integrate(f, a, b, std::span<const double>(singular_points.begin(), singular_points.size()), scheme);
}

}  // namespace fht
