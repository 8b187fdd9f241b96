#pragma once

#include "finhilbert/inversion.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace fht {

struct CaseRecord {
    std::string descriptor;
    double lhs = 0.0;
    double rhs = 0.0;
    double residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;  // residual <= tolerance
};

struct VerificationReport {
    std::string suite;
    std::uint64_t seed = 0;
    std::vector<CaseRecord> cases;

    int n_pass() const;
    int n_fail() const;
    double max_residual() const;
    bool pass() const { return n_fail() == 0; }
};

struct SweepPoint {
    std::string label;
    double measured = 0.0;
    double bound = 0.0;
    double margin = 0.0;   // bound - measured
    double slack = 1e-9;   // allowed numeric undershoot
    bool pass = false;     // margin >= -slack
};

struct BoundSweep {
    std::string suite;
    std::vector<SweepPoint> points;

    double min_margin() const;
    bool pass() const;
};

// Sweeps serialize through the common report shape: lhs = measured,
// rhs = bound, residual = -margin, tolerance = slack.
VerificationReport to_report(const BoundSweep& sweep);

struct SuiteOptions {
    int resolution = 4096;
    double trim = 0.9;
    double tol_parseval = 1e-6;
    double tol_poincare_bertrand = 1e-5;
};

VerificationReport suite_parseval(int n_cases, std::uint64_t seed,
                                  const SuiteOptions& opt = {});
VerificationReport suite_poincare_bertrand(int n_cases, std::uint64_t seed,
                                           const SuiteOptions& opt = {});
BoundSweep suite_norm_bounds(std::span<const double> p_grid = {});
BoundSweep suite_appendix();
VerificationReport suite_calderon(int n_cases, const SuiteOptions& opt = {});
VerificationReport suite_logweights(int n_cases, const SuiteOptions& opt = {});

// Witness machinery shared by the suites, the CLI and the tests.
// h(t) = 1/(t log^2 t) on (0,1/2), zero elsewhere: integrable but not in
// L log L, and T(h) is not integrable to the left of 0.
RealFunction kober_h();
// int over (-1/2,0) of |T(h)|, with x-panels refined toward 0 to depth
// `log2_resolution`; grows (slowly) without bound as the depth increases.
double kober_transform_integral(int log2_resolution);

std::vector<std::string> suite_names();
// Runs one named suite or "all"; appends reports; returns 0 if every case
// passed, 1 otherwise.  Unknown names throw std::invalid_argument.
int run_suites(const std::string& name, std::uint64_t seed, const SuiteOptions& opt,
               std::vector<VerificationReport>& out);

}  // namespace fht
