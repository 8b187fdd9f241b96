#pragma once

#include "finhilbert/chebyshev.hpp"

#include <optional>
#include <vector>

namespace fht {

// Step approximation of the decreasing rearrangement f* on (0,2):
// f*(t) = levels[i] on (breakpoints[i], breakpoints[i+1]].
struct RearrangementProfile {
    std::vector<double> breakpoints;  // 0 = t_0 < t_1 < ... < t_K = 2
    std::vector<double> levels;       // non-increasing, length K
};

// Cell-mean sampling of |f| over `resolution` uniform cells of (-1,1),
// sorted descending.  Declared-singular endpoint cells use a geometric
// subsample cascade (8 levels) so the integrable endpoint mass is kept.
// Per-step integrals equal the per-cell integrals of |f| exactly up to
// the per-cell quadrature, so equimeasurability holds at the profile level.
RearrangementProfile rearrangement(const RealFunction& f, int resolution);
RearrangementProfile rearrangement(const SpectralFunction& f, int resolution);
RearrangementProfile rearrangement(const GridFunction& f, int resolution);

// Step evaluation: f*(t) for t in (0,2].
double profile_value(const RearrangementProfile& p, double t);

double norm_l1(const RearrangementProfile& p);
// sum levels[i]*(Phi(t_{i+1}) - Phi(t_i)) with Phi(t) = t log(2e/t) + t,
// the exact antiderivative of log(2e/t); exact on step profiles.
double norm_llogl(const RearrangementProfile& p);
// Per-step quadrature of f* log^alpha(2e/t); alpha >= 1.
double norm_llogl_alpha(const RearrangementProfile& p, double alpha);
double norm_lp(const RearrangementProfile& p, double pexp);
// sup over breakpoints of t^{1/p} f*(t); the step sup sits at the right
// end of each step.
double weak_quasi(const RearrangementProfile& p, double pexp);

// Calderon operator S(f*)(t) = (1/t) int_0^t f* + int_t^2 f*/s ds,
// closed form on step profiles.  t must lie in (0,2).
double calderon(const RearrangementProfile& p, double t);

struct NormReport {
    double l1 = 0.0;
    double llogl = 0.0;
    double lloglsq = 0.0;
    std::vector<std::pair<double, double>> lp;          // (p, value)
    std::vector<std::pair<double, double>> weak;        // (p, value)
};

NormReport norm_report(const RearrangementProfile& p, std::span<const double> p_list = {},
                       std::span<const double> weak_list = {});

}  // namespace fht
