#pragma once

#include "finhilbert/transform.hpp"

#include <string>
#include <variant>
#include <vector>

namespace fht {

// Solution family of T(f) = g: f = T-hat(g) + c / sqrt(1-x^2).
struct AirfoilSolution {
    std::variant<SpectralFunction, GridFunction> particular;  // T-hat(g), zero mean
    double homogeneous_coeff = 0.0;
    double residual_l1 = 0.0;  // ||T(f) - g||_L1 at the reported resolution

    const SpectralFunction& spectral() const& { return std::get<SpectralFunction>(particular); }
    SpectralFunction spectral() && { return std::get<SpectralFunction>(std::move(particular)); }
    // Full solution evaluated at x (spectral path only).
    double operator()(double x) const;
};

AirfoilSolution solve_airfoil(const SpectralFunction& g, double c);
AirfoilSolution solve_airfoil(const RealFunction& g, std::span<const double> xs, double c,
                              const QuadratureOptions& opt = {});

// Evidence-graded range membership: computes T-hat(g), its L log L norm at
// two resolutions and the round-trip residual ||T(T-hat(g)) - g||_L1.
// Verdicts are evidence, never proofs.
struct RangeEvidence {
    bool in_range_evidence = false;
    bool out_of_range_evidence = false;
    double roundtrip_residual = 0.0;
    double llogl_coarse = 0.0;
    double llogl_fine = 0.0;
    double growth_ratio = 1.0;  // llogl_fine / llogl_coarse
    std::string note;
};

struct RangeCheckOptions {
    int coarse_resolution = 1024;
    int fine_resolution = 4096;
    double residual_tol = 1e-6;
    double growth_tol = 1.02;  // relative growth across resolutions flags divergence
    QuadratureOptions quad;
};

RangeEvidence range_check(const SpectralFunction& g, const RangeCheckOptions& opt = {});
RangeEvidence range_check(const RealFunction& g, const RangeCheckOptions& opt = {});

// Optimal-domain diagnostic: greedy adversarial unions of dyadic cells,
// ||T(f chi_A)||_L1 tracked per depth; evaluation resolution scales with
// depth so a genuinely divergent sup keeps growing while a bounded one
// stabilizes.
struct MembershipDiagnostic {
    int catalogue_depth = 0;
    std::vector<double> sup_by_depth;  // running max per depth (1..catalogue_depth)
    double sup_lower_bound = 0.0;
    bool growth_flag = false;
    int skipped_sets = 0;
};

struct DomainDiagOptions {
    double growth_threshold = 0.005;  // min relative increment that counts as growth
    QuadratureOptions quad;
};

MembershipDiagnostic optimal_domain_diag(const RealFunction& f, int depth,
                                         const DomainDiagOptions& opt = {});

// |int f T(g) + int g T(f)|; the Parseval formula reads int f T(g) = -int g T(f).
double parseval_residual(const SpectralFunction& f, const SpectralFunction& g);
double parseval_residual(const RealFunction& f, const RealFunction& Tf,
                         const RealFunction& g, const RealFunction& Tg,
                         const QuadratureOptions& opt = {});

}  // namespace fht
