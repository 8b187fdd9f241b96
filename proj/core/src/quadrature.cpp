#include "finhilbert/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace fht {

namespace {

// Gauss-Legendre nodes by Newton iteration on P_n, seeded with the
// Chebyshev estimate.  Standard Golub-Welsch alternative not needed at
// the orders used here (n <= a few hundred).
void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w) {
    x.assign(n, 0.0);
    w.assign(n, 0.0);
    const int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
            }
            pp = n * (z * p0 - p1) / (z * z - 1.0);
            double z1 = z;
            z = z1 - p0 / pp;
            if (std::abs(z - z1) < 1e-15) break;
        }
        x[i] = -z;
        x[n - 1 - i] = z;
        w[i] = 2.0 / ((1.0 - z * z) * pp * pp);
        w[n - 1 - i] = w[i];
    }
}

struct GLCache {
    std::vector<double> x, w;
    int n = 0;
    void ensure(int pts) {
        if (n != pts) {
            gauss_legendre(pts, x, w);
            n = pts;
        }
    }
};

thread_local GLCache gl_cache;

double panel_sum(const std::function<double(double)>& f, double lo, double hi,
                 const std::vector<double>& gx, const std::vector<double>& gw) {
    if (std::nextafter(lo, hi) >= hi) return 0.0;  // no representable interior point
    const double c = 0.5 * (hi + lo);
    const double h = 0.5 * (hi - lo);
    double s = 0.0;
    for (size_t k = 0; k < gx.size(); ++k) {
        // For very thin panels the node can round onto an edge, which may
        // be a singular breakpoint; keep nodes strictly interior.
        double t = c + h * gx[k];
        if (t <= lo)
            t = std::nextafter(lo, hi);
        else if (t >= hi)
            t = std::nextafter(hi, lo);
        s += gw[k] * f(t);
    }
    return h * s;
}

// Panels over [lo,hi] with geometric refinement toward whichever ends are
// flagged singular.
void append_edges(double lo, double hi, bool sing_lo, bool sing_hi, int depth,
                  std::vector<double>& edges) {
    const double len = hi - lo;
    if (len <= 0.0) return;
    edges.push_back(lo);
    if (sing_lo && sing_hi) {
        const double mid = 0.5 * (lo + hi);
        for (int k = depth; k >= 1; --k) edges.push_back(lo + 0.5 * len * std::ldexp(1.0, -k));
        edges.push_back(mid);
        for (int k = 1; k <= depth; ++k) edges.push_back(hi - 0.5 * len * std::ldexp(1.0, -k));
    } else if (sing_lo) {
        for (int k = depth; k >= 1; --k) edges.push_back(lo + len * std::ldexp(1.0, -k));
    } else if (sing_hi) {
        for (int k = 1; k <= depth; ++k) edges.push_back(hi - len * std::ldexp(1.0, -k));
    }
    edges.push_back(hi);
}

// Integral of f over the interval between the singular end e and m (m may be
// below or above e) using the substitution t = e + dir (m - e) ... concretely
// s = sqrt(|t - e|), dt = 2 s ds, with a dyadic panel cascade toward s = 0.
double edge_sub_sum(const std::function<double(double)>& f, double e, double m, int depth,
                    const std::vector<double>& gx, const std::vector<double>& gw) {
    const double len = std::abs(m - e);
    if (!(len > 0.0)) return 0.0;
    const double dir = (m > e) ? 1.0 : -1.0;
    const double S = std::sqrt(len);
    const double t_lo = std::min(e, m), t_hi = std::max(e, m);
    if (std::nextafter(t_lo, t_hi) >= t_hi) return 0.0;  // no representable interior point
    double total = 0.0;
    double s_lo = 0.0;
    for (int k = depth; k >= 0; --k) {
        const double s_hi = S * std::ldexp(1.0, -k);
        if (s_hi > s_lo) {
            const double c = 0.5 * (s_hi + s_lo);
            const double h = 0.5 * (s_hi - s_lo);
            double acc = 0.0;
            for (size_t j = 0; j < gx.size(); ++j) {
                const double s = c + h * gx[j];
                double t = e + dir * s * s;
                // keep samples strictly interior to the original panel
                if (t <= t_lo)
                    t = std::nextafter(t_lo, t_hi);
                else if (t >= t_hi)
                    t = std::nextafter(t_hi, t_lo);
                // Jacobian from the rounded node, not the intended s: t - e is
                // exact near e, and a mismatched pair (s, t) injects O(ulp/s^2)
                // relative noise into singular integrands on the deepest panels.
                const double s_eff = std::sqrt(std::abs(t - e));
                acc += gw[j] * 2.0 * s_eff * f(t);
            }
            total += h * acc;
        }
        s_lo = s_hi;
    }
    // total equals the positively oriented integral over [t_lo, t_hi] for
    // either direction of the substitution.
    return total;
}

}  // namespace

QuadratureRule quad_rule(RuleKind kind, int n) {
    if (n < 1) throw std::invalid_argument("quad_rule: n must be >= 1");
    QuadratureRule r;
    r.kind = kind;
    switch (kind) {
        case RuleKind::GaussLegendre:
            gauss_legendre(n, r.nodes, r.weights);
            break;
        case RuleKind::GaussChebyshevT: {
            r.nodes.resize(n);
            r.weights.assign(n, std::numbers::pi / n);
            for (int k = 0; k < n; ++k)
                r.nodes[k] = -std::cos(std::numbers::pi * (2 * k + 1) / (2.0 * n));
            break;
        }
        case RuleKind::GaussChebyshevU: {
            r.nodes.resize(n);
            r.weights.resize(n);
            for (int k = 1; k <= n; ++k) {
                const double th = std::numbers::pi * k / (n + 1.0);
                r.nodes[n - k] = std::cos(th);
                r.weights[n - k] = std::numbers::pi / (n + 1.0) * std::sin(th) * std::sin(th);
            }
            break;
        }
    }
    return r;
}

double integrate(const std::function<double(double)>& f, double a, double b,
                 std::span<const double> singular_points, const PanelScheme& scheme) {
    if (!(a < b)) {
        if (a == b) return 0.0;
        return -integrate(f, b, a, singular_points, scheme);
    }
    gl_cache.ensure(scheme.points);

    // Breakpoints: interval endpoints plus interior singular points, sorted.
    std::vector<double> cuts{a, b};
    std::vector<char> sing_at_cut;  // parallel flags resolved after sorting
    for (double s : singular_points)
        if (s > a && s < b) cuts.push_back(s);
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    auto is_singular = [&](double p) {
        for (double s : singular_points)
            if (s == p || std::abs(s - p) <= 1e-300) return true;
        for (double s : singular_points)
            if (std::abs(s - p) <= 1e-14 * std::max(1.0, std::abs(p))) return true;
        return false;
    };

    double total = 0.0;
    std::vector<double> edges;
    for (size_t i = 0; i + 1 < cuts.size(); ++i) {
        const double lo = cuts[i], hi = cuts[i + 1];
        const bool slo = is_singular(lo), shi = is_singular(hi);
        if (scheme.sqrt_edge && (slo || shi)) {
            const double mid = 0.5 * (lo + hi);
            if (slo)
                total += edge_sub_sum(f, lo, mid, scheme.depth, gl_cache.x, gl_cache.w);
            else
                total += panel_sum(f, lo, mid, gl_cache.x, gl_cache.w);
            if (shi)
                total += edge_sub_sum(f, hi, mid, scheme.depth, gl_cache.x, gl_cache.w);
            else
                total += panel_sum(f, mid, hi, gl_cache.x, gl_cache.w);
            continue;
        }
        edges.clear();
        append_edges(lo, hi, slo, shi, scheme.depth, edges);
        for (size_t j = 0; j + 1 < edges.size(); ++j) {
            if (edges[j + 1] <= edges[j]) continue;
            total += panel_sum(f, edges[j], edges[j + 1], gl_cache.x, gl_cache.w);
        }
    }
    return total;
}

}  // namespace fht
