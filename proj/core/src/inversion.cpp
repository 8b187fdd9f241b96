#include "finhilbert/inversion.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace fht {

double AirfoilSolution::operator()(double x) const {
    const auto& part = std::get<SpectralFunction>(particular);
    const double w = std::sqrt((1.0 - x) * (1.0 + x));
    return evaluate(part, x) + homogeneous_coeff / w;
}

AirfoilSolution solve_airfoil(const SpectralFunction& g, double c) {
    if (g.weight != WeightClass::Flat)
        throw std::invalid_argument("solve_airfoil: spectral path requires Flat data");
    AirfoilSolution sol;
    SpectralFunction particular = fht_hat(g).spectral();
    sol.homogeneous_coeff = c;

    // Re-apply T to the full solution; the homogeneous part is annihilated
    // and the particular part reproduces g coefficient-by-coefficient.
    SpectralFunction full = particular;
    full.coeffs[0] += c;
    const SpectralFunction back = fht_spectral(full).spectral();
    SpectralFunction diff = back;
    diff.coeffs.resize(std::max(back.coeffs.size(), g.coeffs.size()), 0.0);
    for (size_t i = 0; i < g.coeffs.size(); ++i) diff.coeffs[i] -= g.coeffs[i];
    sol.residual_l1 =
        integrate([&](double x) { return std::abs(evaluate(diff, x)); }, -1.0, 1.0, {});
    sol.particular = std::move(particular);
    return sol;
}

AirfoilSolution solve_airfoil(const RealFunction& g, std::span<const double> xs, double c,
                              const QuadratureOptions& opt) {
    AirfoilSolution sol;
    sol.homogeneous_coeff = c;
    GridFunction part = fht_hat(g, xs, opt).grid();

    // Residual by re-applying the transform to T-hat(g) through a nested
    // quadrature on a small Chebyshev grid.
    RealFunction particular_fn;
    particular_fn.eval = [&g, &opt](double t) { return fht_hat_point(g, t, opt); };
    particular_fn.singular_left = particular_fn.singular_right = true;
    // Chebyshev-T quadrature of |T(f)-g| * w, i.e. plain dx measure.
    const auto rule = quad_rule(RuleKind::GaussChebyshevT, 17);
    double resid = 0.0;
    for (size_t i = 0; i < rule.nodes.size(); ++i) {
        const double x = rule.nodes[i];
        const double w = std::sqrt((1.0 - x) * (1.0 + x));
        const double tfx = fht_point(particular_fn, x, opt);
        resid += rule.weights[i] * std::abs(tfx - g(x)) * w;
    }
    sol.residual_l1 = resid;
    sol.particular = std::move(part);
    return sol;
}

namespace {

RangeEvidence range_check_impl(const RealFunction& that_g, const SpectralFunction* spectral_g,
                               const RangeCheckOptions& opt) {
    RangeEvidence ev;
    RealFunction that;  // T-hat(g)
    if (spectral_g) {
        const SpectralFunction part = fht_hat(*spectral_g).spectral();
        that = as_real_function(part);
        ev.roundtrip_residual = 0.0;  // exact coefficient algebra
        const SpectralFunction back = fht_spectral(part).spectral();
        SpectralFunction diff = back;
        diff.coeffs.resize(std::max(back.coeffs.size(), spectral_g->coeffs.size()), 0.0);
        for (size_t i = 0; i < spectral_g->coeffs.size(); ++i)
            diff.coeffs[i] -= spectral_g->coeffs[i];
        ev.roundtrip_residual =
            integrate([&](double x) { return std::abs(evaluate(diff, x)); }, -1.0, 1.0, {});
    } else {
        that.eval = [&that_g, &opt](double t) { return fht_hat_point(that_g, t, opt.quad); };
        that.singular_left = that.singular_right = true;
        // Round-trip on a trimmed Chebyshev grid (nested quadrature).
        const auto rule = quad_rule(RuleKind::GaussChebyshevT, 17);
        double resid = 0.0;
        QuadratureOptions outer = opt.quad;
        for (size_t i = 0; i < rule.nodes.size(); ++i) {
            const double x = rule.nodes[i];
            const double w = std::sqrt((1.0 - x) * (1.0 + x));
            resid += rule.weights[i] * std::abs(fht_point(that, x, outer) - that_g(x)) * w;
        }
        ev.roundtrip_residual = resid;
    }

    ev.llogl_coarse = norm_llogl(rearrangement(that, opt.coarse_resolution));
    ev.llogl_fine = norm_llogl(rearrangement(that, opt.fine_resolution));
    ev.growth_ratio = (ev.llogl_coarse > 0.0) ? ev.llogl_fine / ev.llogl_coarse : 1.0;

    if (ev.growth_ratio > opt.growth_tol) {
        ev.out_of_range_evidence = true;
        ev.note = "L log L norm of T-hat(g) grows across resolutions";
    } else if (ev.roundtrip_residual < opt.residual_tol) {
        ev.in_range_evidence = true;
        ev.note = "stable L log L norm and small round-trip residual";
    } else {
        ev.note = "inconclusive: stable norm but round-trip residual above tolerance";
    }
    return ev;
}

}  // namespace

RangeEvidence range_check(const SpectralFunction& g, const RangeCheckOptions& opt) {
    if (g.weight == WeightClass::Flat)
        return range_check_impl(as_real_function(g), &g, opt);
    return range_check_impl(as_real_function(g), nullptr, opt);
}

RangeEvidence range_check(const RealFunction& g, const RangeCheckOptions& opt) {
    return range_check_impl(g, nullptr, opt);
}

namespace {

// One dyadic cell [lo,hi) contribution to pi*T(f chi_cell)(x).
double cell_kernel(const RealFunction& f, double lo, double hi, double x,
                   std::span<const double> fsing) {
    std::vector<double> sing;
    for (double s : fsing)
        if (s >= lo && s <= hi) sing.push_back(s);
    if (f.singular_left && lo <= -1.0 + 1e-15) sing.push_back(lo);
    if (f.singular_right && hi >= 1.0 - 1e-15) sing.push_back(hi);
    PanelScheme scheme{24, 12};
    if (x > lo && x < hi) {
        const double fx = f(x);
        sing.push_back(x);
        const double reg =
            integrate([&](double t) { return (f(t) - fx) / (t - x); }, lo, hi, sing, scheme);
        return reg + fx * std::log((hi - x) / (x - lo));
    }
    return integrate([&](double t) { return f(t) / (t - x); }, lo, hi, sing, scheme);
}

}  // namespace

MembershipDiagnostic optimal_domain_diag(const RealFunction& f, int depth,
                                         const DomainDiagOptions& opt) {
    if (depth < 1 || depth > 12)
        throw std::invalid_argument("optimal_domain_diag: depth must be in [1,12]");
    MembershipDiagnostic diag;
    diag.catalogue_depth = depth;

    const auto& fsing = opt.quad.interior_singularities;

    for (int d = 1; d <= depth; ++d) {
        const int ncells = 1 << d;
        const double w = 2.0 / ncells;

        // Greedy-selection grid; must resolve the cells, otherwise the
        // per-cell kernels alias and the selection degenerates into noise.
        const int n_coarse = std::max(256, 4 * ncells);
        std::vector<double> xg(n_coarse);
        for (int j = 0; j < n_coarse; ++j) xg[j] = -1.0 + (j + 0.5) * 2.0 / n_coarse;
        const double dx = 2.0 / n_coarse;

        // Per-cell kernels on the selection grid.
        std::vector<std::vector<double>> K;
        std::vector<std::pair<double, double>> cells;
        for (int c = 0; c < ncells; ++c) {
            const double lo = -1.0 + c * w, hi = lo + w;
            // Cells with no mass cannot change the sup.
            bool empty = true;
            for (int q = 0; q < 8 && empty; ++q)
                if (f(lo + (q + 0.5) * w / 8.0) != 0.0) empty = false;
            for (double s : fsing)
                if (s >= lo && s <= hi) empty = false;
            if (empty) continue;
            std::vector<double> col(n_coarse);
            bool bad = false;
            for (int j = 0; j < n_coarse; ++j) {
                col[j] = cell_kernel(f, lo, hi, xg[j], fsing) / std::numbers::pi;
                if (!std::isfinite(col[j])) bad = true;
            }
            if (bad) {
                ++diag.skipped_sets;
                continue;
            }
            K.push_back(std::move(col));
            cells.emplace_back(lo, hi);
        }

        // Greedy adversarial union: keep adding the cell with the largest
        // norm increment.
        std::vector<double> sum(n_coarse, 0.0);
        std::vector<char> used(K.size(), 0);
        std::vector<int> chosen;
        double cur = 0.0;
        for (;;) {
            int best = -1;
            double best_val = cur;
            for (size_t c = 0; c < K.size(); ++c) {
                if (used[c]) continue;
                double v = 0.0;
                for (int j = 0; j < n_coarse; ++j) v += std::abs(sum[j] + K[c][j]);
                v *= dx;
                if (v > best_val + 1e-15) {
                    best_val = v;
                    best = static_cast<int>(c);
                }
            }
            if (best < 0) break;
            used[best] = 1;
            chosen.push_back(best);
            for (int j = 0; j < n_coarse; ++j) sum[j] += K[best][j];
            cur = best_val;
        }

        // Refined norm of the chosen union: merge contiguous cells into
        // runs, integrate |T(f chi_A)| with x-refinement toward the run
        // edges; refinement depth follows the catalogue depth.
        std::vector<std::pair<double, double>> runs;
        {
            std::vector<std::pair<double, double>> picked;
            for (int c : chosen) picked.push_back(cells[c]);
            std::sort(picked.begin(), picked.end());
            for (const auto& pc : picked) {
                if (!runs.empty() && std::abs(runs.back().second - pc.first) < 1e-12)
                    runs.back().second = pc.second;
                else
                    runs.push_back(pc);
            }
        }
        double refined = 0.0;
        if (!runs.empty()) {
            std::vector<double> edges{-1.0, 1.0};
            std::vector<double> splits;
            for (const auto& r : runs) {
                edges.push_back(r.first);
                edges.push_back(r.second);
                splits.push_back(r.first);
                splits.push_back(r.second);
            }
            for (double s : fsing) edges.push_back(s);
            RealFunction masked;
            masked.eval = [&](double t) {
                for (const auto& r : runs)
                    if (t >= r.first && t < r.second) return f(t);
                return 0.0;
            };
            masked.singular_left = f.singular_left && runs.front().first <= -1.0 + 1e-12;
            masked.singular_right = f.singular_right && runs.back().second >= 1.0 - 1e-12;
            QuadratureOptions tq = opt.quad;
            tq.interior_singularities = splits;
            for (double s : fsing) tq.interior_singularities.push_back(s);
            PanelScheme xs_scheme{d + 4, 16};
            refined = integrate(
                [&](double x) { return std::abs(fht_point(masked, x, tq)); }, -1.0, 1.0,
                edges, xs_scheme);
        }

        const double running = diag.sup_by_depth.empty()
                                   ? refined
                                   : std::max(refined, diag.sup_by_depth.back());
        diag.sup_by_depth.push_back(running);
    }

    diag.sup_lower_bound = diag.sup_by_depth.empty() ? 0.0 : diag.sup_by_depth.back();

    // Growth over the upper half of the depth range: every increment must
    // exceed the relative threshold.
    diag.growth_flag = true;
    const int from = std::max(1, depth / 2);
    for (int d = from; d < depth; ++d) {
        const double a = diag.sup_by_depth[d - 1], b = diag.sup_by_depth[d];
        if (!(a > 0.0) || (b - a) / a <= opt.growth_threshold) {
            diag.growth_flag = false;
            break;
        }
    }
    if (diag.sup_lower_bound == 0.0) diag.growth_flag = false;
    return diag;
}

namespace {

// T of a spectral function as a callable plus singularity flags:
// InvSqrt/Sqrt have exact Flat images; Flat inputs are polynomials with
// the closed log form.
struct TransformedFn {
    RealFunction fn;
};

TransformedFn transformed(const SpectralFunction& f) {
    TransformedFn out;
    if (f.weight == WeightClass::Flat) {
        const auto form = fht_poly(u_series_to_monomials(f.coeffs));
        out.fn.eval = [form](double x) { return form(x); };
        out.fn.singular_left = out.fn.singular_right = true;  // log endpoints
    } else {
        const SpectralFunction img = fht_spectral(f).spectral();
        out.fn = as_real_function(img);
    }
    return out;
}

}  // namespace

double parseval_residual(const SpectralFunction& f, const SpectralFunction& g) {
    const RealFunction ff = as_real_function(f);
    const RealFunction gg = as_real_function(g);
    const RealFunction tf = transformed(f).fn;
    const RealFunction tg = transformed(g).fn;
    QuadratureOptions opt;
    opt.panel_depth = 60;  // endpoint-singular pairings need the deep cascade
    return parseval_residual(ff, tf, gg, tg, opt);
}

double parseval_residual(const RealFunction& f, const RealFunction& Tf,
                         const RealFunction& g, const RealFunction& Tg,
                         const QuadratureOptions& opt) {
    PanelScheme scheme{opt.panel_depth, opt.panel_points};
    auto pair_int = [&](const RealFunction& a, const RealFunction& b) {
        std::vector<double> sing;
        if (a.singular_left || b.singular_left) sing.push_back(-1.0);
        if (a.singular_right || b.singular_right) sing.push_back(1.0);
        for (double s : opt.interior_singularities) sing.push_back(s);
        return integrate([&](double x) { return a(x) * b(x); }, -1.0, 1.0, sing, scheme);
    };
    const double lhs = pair_int(f, Tg);
    const double rhs = pair_int(g, Tf);
    if (!std::isfinite(lhs) || !std::isfinite(rhs))
        throw std::runtime_error("parseval_residual: divergent pairing integral");
    return std::abs(lhs + rhs);
}

}  // namespace fht
