#include "finhilbert/transform.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace fht {

TransformResult fht_spectral(const SpectralFunction& f) {
    if (f.coeffs.empty()) throw std::invalid_argument("fht_spectral: empty coefficients");
    TransformResult r;
    r.method = TransformMethod::Spectral;
    SpectralFunction out;
    out.weight = WeightClass::Flat;
    switch (f.weight) {
        case WeightClass::InvSqrt: {
            // T(T_n / w) = U_{n-1}; T_0/w is the kernel.
            if (f.coeffs.size() <= 1) {
                out.coeffs = {0.0};
            } else {
                out.coeffs.assign(f.coeffs.begin() + 1, f.coeffs.end());
            }
            break;
        }
        case WeightClass::Sqrt: {
            // T(w U_m) = -T_{m+1}; T_1 = U_1/2, T_{m+1} = (U_{m+1} - U_{m-1})/2.
            const size_t n = f.coeffs.size();
            out.coeffs.assign(n + 1, 0.0);
            for (size_t m = 0; m < n; ++m) {
                out.coeffs[m + 1] -= 0.5 * f.coeffs[m];
                if (m >= 1) out.coeffs[m - 1] += 0.5 * f.coeffs[m];
            }
            trim_coeffs(out.coeffs);
            break;
        }
        case WeightClass::Flat:
            throw std::invalid_argument(
                "fht_spectral: Flat input has no spectral closure, use fht_quadrature");
    }
    r.output = std::move(out);
    return r;
}

double fht_point(const RealFunction& f, double x, const QuadratureOptions& opt) {
    if (!(x > -1.0 && x < 1.0)) throw std::domain_error("fht_point: x outside (-1,1)");
    const double fx = f(x);
    if (!std::isfinite(fx))
        throw std::invalid_argument("fht_point: f not finite at evaluation point");
    PanelScheme scheme{opt.panel_depth, opt.panel_points, /*sqrt_edge=*/true};
    std::vector<double> sing{x};  // difference quotient loses smoothness at t = x
    if (f.singular_left) sing.push_back(-1.0);
    if (f.singular_right) sing.push_back(1.0);
    for (double s : opt.interior_singularities) sing.push_back(s);
    const double regular = integrate(
        [&](double t) { return (f(t) - fx) / (t - x); }, -1.0, 1.0, sing, scheme);
    const double logterm = fx * std::log((1.0 - x) / (1.0 + x));
    return (regular + logterm) / std::numbers::pi;
}

TransformResult fht_quadrature(const RealFunction& f, std::span<const double> xs,
                               const QuadratureOptions& opt) {
    TransformResult r;
    r.method = TransformMethod::Quadrature;
    GridFunction g;
    g.nodes.assign(xs.begin(), xs.end());
    g.values.resize(xs.size());
    g.kind = NodeKind::Custom;
    for (size_t i = 0; i < xs.size(); ++i) g.values[i] = fht_point(f, xs[i], opt);
    r.output = std::move(g);
    return r;
}

TransformResult fht_hat(const SpectralFunction& g) {
    if (g.weight != WeightClass::Flat)
        throw std::invalid_argument("fht_hat: spectral path requires a Flat U-series");
    TransformResult r;
    r.method = TransformMethod::Spectral;
    SpectralFunction out;
    out.weight = WeightClass::InvSqrt;
    out.coeffs.assign(g.coeffs.size() + 1, 0.0);
    for (size_t m = 0; m < g.coeffs.size(); ++m) out.coeffs[m + 1] = g.coeffs[m];
    r.output = std::move(out);
    return r;
}

double fht_hat_point(const RealFunction& g, double x, const QuadratureOptions& opt) {
    RealFunction wg;
    wg.eval = [&g](double t) { return std::sqrt((1.0 - t) * (1.0 + t)) * g(t); };
    // the weight has a square-root branch at both endpoints regardless of g
    wg.singular_left = wg.singular_right = true;
    return -fht_point(wg, x, opt) / std::sqrt((1.0 - x) * (1.0 + x));
}

TransformResult fht_hat(const RealFunction& g, std::span<const double> xs,
                        const QuadratureOptions& opt) {
    TransformResult r;
    r.method = TransformMethod::Quadrature;
    GridFunction out;
    out.nodes.assign(xs.begin(), xs.end());
    out.values.resize(xs.size());
    out.kind = NodeKind::Custom;
    for (size_t i = 0; i < xs.size(); ++i) out.values[i] = fht_hat_point(g, xs[i], opt);
    r.output = std::move(out);
    return r;
}

SpectralFunction project_P(const SpectralFunction& f) {
    double mean = 0.0;  // (1/pi) int f
    switch (f.weight) {
        case WeightClass::InvSqrt:
            mean = f.coeffs[0];  // int T_n/w = pi d_{n0}
            break;
        case WeightClass::Flat:
            // int U_n = 2/(n+1) for even n
            for (size_t n = 0; n < f.coeffs.size(); n += 2)
                mean += f.coeffs[n] * 2.0 / (n + 1.0) / std::numbers::pi;
            break;
        case WeightClass::Sqrt:
            // int w U_n = (pi/2) d_{n0}
            mean = 0.5 * f.coeffs[0];
            break;
    }
    return SpectralFunction{WeightClass::InvSqrt, {mean}};
}

SpectralFunction project_P(const RealFunction& f, const QuadratureOptions& opt) {
    PanelScheme scheme{opt.panel_depth, opt.panel_points, /*sqrt_edge=*/true};
    std::vector<double> sing;
    if (f.singular_left) sing.push_back(-1.0);
    if (f.singular_right) sing.push_back(1.0);
    for (double s : opt.interior_singularities) sing.push_back(s);
    const double mean = integrate(f.eval, -1.0, 1.0, sing, scheme) / std::numbers::pi;
    return SpectralFunction{WeightClass::InvSqrt, {mean}};
}

double PolyLogForm::operator()(double x) const {
    auto horner = [x](const std::vector<double>& c) {
        double v = 0.0;
        for (size_t i = c.size(); i-- > 0;) v = v * x + c[i];
        return v;
    };
    return horner(poly) + horner(logcoef) * std::log((1.0 - x) / (1.0 + x)) / std::numbers::pi;
}

PolyLogForm fht_poly(std::span<const double> monomial_coeffs) {
    // (1/pi) int (t^n - x^n)/(t-x) dt = (1/pi) sum_{k=0}^{n-1} x^{n-1-k} int t^k dt
    // with int_{-1}^1 t^k dt = 2/(k+1) for even k.
    PolyLogForm form;
    form.logcoef.assign(monomial_coeffs.begin(), monomial_coeffs.end());
    if (form.logcoef.empty()) form.logcoef.push_back(0.0);
    form.poly.assign(std::max<size_t>(form.logcoef.size(), 1) , 0.0);
    for (size_t n = 1; n < form.logcoef.size(); ++n) {
        const double cn = form.logcoef[n];
        if (cn == 0.0) continue;
        for (size_t k = 0; k < n; ++k) {
            if (k % 2 == 0)
                form.poly[n - 1 - k] += cn * 2.0 / (k + 1.0) / std::numbers::pi;
        }
    }
    while (form.poly.size() > 1 && form.poly.back() == 0.0) form.poly.pop_back();
    return form;
}

std::vector<double> u_series_to_monomials(std::span<const double> ucoeffs) {
    // U_{m+1} = 2x U_m - U_{m-1}
    std::vector<double> acc(1, 0.0);
    std::vector<double> um1{1.0};            // U_0
    std::vector<double> um{0.0, 2.0};        // U_1
    auto add_scaled = [&acc](const std::vector<double>& p, double c) {
        if (acc.size() < p.size()) acc.resize(p.size(), 0.0);
        for (size_t i = 0; i < p.size(); ++i) acc[i] += c * p[i];
    };
    for (size_t m = 0; m < ucoeffs.size(); ++m) {
        if (m == 0) add_scaled(um1, ucoeffs[m]);
        else if (m == 1) add_scaled(um, ucoeffs[m]);
        else {
            std::vector<double> next(um.size() + 1, 0.0);
            for (size_t i = 0; i < um.size(); ++i) next[i + 1] += 2.0 * um[i];
            for (size_t i = 0; i < um1.size(); ++i) next[i] -= um1[i];
            um1 = std::move(um);
            um = std::move(next);
            add_scaled(um, ucoeffs[m]);
        }
    }
    if (acc.empty()) acc.push_back(0.0);
    return acc;
}

DominationReport calderon_domination(const RealFunction& f, std::span<const double> ts,
                                     int resolution, const QuadratureOptions& opt) {
    DominationReport rep;
    rep.ts.assign(ts.begin(), ts.end());

    auto sup_at = [&](int res, std::vector<double>* ratios_out) {
        const RearrangementProfile fstar = rearrangement(f, res);
        // Sample T(f) at the midpoints of `res` cells, rearrange the samples.
        RealFunction tf;
        tf.eval = [&](double x) { return fht_point(f, x, opt); };
        const RearrangementProfile tfstar = rearrangement(tf, res);
        double sup = 0.0;
        for (double t : ts) {
            const double num = profile_value(tfstar, t);
            const double den = calderon(fstar, t);
            double ratio;
            if (den == 0.0) {
                ratio = (num == 0.0) ? 0.0 : std::numeric_limits<double>::infinity();
                if (num != 0.0) rep.violation = true;
            } else {
                ratio = num / den;
            }
            if (ratios_out) ratios_out->push_back(ratio);
            sup = std::max(sup, ratio);
        }
        return sup;
    };

    rep.sup_ratio_coarse = sup_at(std::max(8, resolution / 2), nullptr);
    rep.sup_ratio = sup_at(resolution, &rep.ratios);
    return rep;
}

}  // namespace fht
