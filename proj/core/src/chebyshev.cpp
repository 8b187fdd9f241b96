#include "finhilbert/chebyshev.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace fht {

std::string weight_name(WeightClass w) {
    switch (w) {
        case WeightClass::InvSqrt: return "inv_sqrt";
        case WeightClass::Flat: return "flat_u";
        case WeightClass::Sqrt: return "sqrt_u";
    }
    return "flat_u";
}

WeightClass weight_from_name(const std::string& s) {
    if (s == "inv_sqrt") return WeightClass::InvSqrt;
    if (s == "flat_u") return WeightClass::Flat;
    if (s == "sqrt_u") return WeightClass::Sqrt;
    throw std::invalid_argument("unknown weight class: " + s);
}

namespace {

// Clenshaw backward recurrence for p_{n+1} = 2x p_n - p_{n-1}.
// Sum of a_n T_n = b0 - x*b1; sum of a_n U_n = b0.
double clenshaw(std::span<const double> a, double x, bool first_kind) {
    double b1 = 0.0, b2 = 0.0;
    for (size_t i = a.size(); i-- > 0;) {
        double b0 = a[i] + 2.0 * x * b1 - b2;
        b2 = b1;
        b1 = b0;
    }
    return first_kind ? b1 - x * b2 : b1;
}

}  // namespace

double evaluate(const SpectralFunction& f, double x) {
    if (!(x > -1.0 && x < 1.0))
        throw std::domain_error("evaluate: point outside (-1,1)");
    if (f.coeffs.empty()) throw std::invalid_argument("evaluate: empty coefficients");
    const double series = clenshaw(f.coeffs, x, f.weight == WeightClass::InvSqrt);
    const double w2 = (1.0 - x) * (1.0 + x);
    switch (f.weight) {
        case WeightClass::InvSqrt: return series / std::sqrt(w2);
        case WeightClass::Flat: return series;
        case WeightClass::Sqrt: return series * std::sqrt(w2);
    }
    return series;
}

double SpectralFunction::operator()(double x) const { return evaluate(*this, x); }

std::vector<double> evaluate(const SpectralFunction& f, std::span<const double> xs) {
    std::vector<double> out(xs.size());
    for (size_t i = 0; i < xs.size(); ++i) out[i] = evaluate(f, xs[i]);
    return out;
}

std::vector<double> class_nodes(WeightClass w, int n) {
    if (n < 1) throw std::invalid_argument("class_nodes: n must be >= 1");
    std::vector<double> x(n);
    if (w == WeightClass::InvSqrt) {
        for (int k = 0; k < n; ++k)
            x[k] = -std::cos(std::numbers::pi * (2 * k + 1) / (2.0 * n));
    } else {
        for (int k = 1; k <= n; ++k)
            x[n - k] = std::cos(std::numbers::pi * k / (n + 1.0));
    }
    return x;
}

SpectralFunction fit(const GridFunction& samples, WeightClass weight, int n) {
    if (n < 1) throw std::invalid_argument("fit: n must be >= 1");
    if (samples.nodes.size() != samples.values.size() ||
        samples.nodes.size() != static_cast<size_t>(n))
        throw std::invalid_argument("fit: sample count must equal n");
    const auto expected = class_nodes(weight, n);
    for (int k = 0; k < n; ++k) {
        if (std::abs(samples.nodes[k] - expected[k]) > 1e-12)
            throw std::invalid_argument("fit: samples not at the class Chebyshev-Gauss nodes");
        if (!std::isfinite(samples.values[k]))
            throw std::invalid_argument("fit: non-finite sample value");
    }

    SpectralFunction f;
    f.weight = weight;
    f.coeffs.assign(n, 0.0);
    if (weight == WeightClass::InvSqrt) {
        // g = value * sqrt(1-x^2); a_m = (2 - d_{m0})/n sum_k g(x_k) T_m(x_k)
        for (int m = 0; m < n; ++m) {
            double s = 0.0;
            for (int k = 0; k < n; ++k) {
                const double th = std::acos(expected[k]);
                const double g = samples.values[k] * std::sin(th);
                s += g * std::cos(m * th);
            }
            f.coeffs[m] = (m == 0 ? 1.0 : 2.0) * s / n;
        }
    } else {
        // U-basis: b_m = 2/(n+1) sum_k g(x_k) U_m(x_k) sin^2(theta_k)
        for (int m = 0; m < n; ++m) {
            double s = 0.0;
            for (int k = 0; k < n; ++k) {
                const double th = std::acos(expected[k]);
                const double sth = std::sin(th);
                double g = samples.values[k];
                if (weight == WeightClass::Sqrt) g /= sth;  // divide prefactor
                s += g * std::sin((m + 1) * th) * sth;      // U_m * sin^2 / sin
            }
            f.coeffs[m] = 2.0 * s / (n + 1);
        }
    }
    return f;
}

GridFunction to_grid(const SpectralFunction& f, std::span<const double> nodes) {
    GridFunction g;
    g.nodes.assign(nodes.begin(), nodes.end());
    g.values = evaluate(f, nodes);
    g.kind = NodeKind::Custom;
    return g;
}

void trim_coeffs(std::vector<double>& coeffs, double eps) {
    while (coeffs.size() > 1 && std::abs(coeffs.back()) <= eps) coeffs.pop_back();
    if (coeffs.empty()) coeffs.push_back(0.0);
}

RealFunction as_real_function(const SpectralFunction& f) {
    RealFunction r;
    r.eval = [f](double x) { return evaluate(f, x); };
    // both weighted classes lose smoothness at the endpoints (1/sqrt blowup
    // or sqrt branch point); only the plain U-series is analytic there
    r.singular_left = r.singular_right = (f.weight != WeightClass::Flat);
    return r;
}

RealFunction as_real_function(const GridFunction& g) {
    if (g.nodes.size() != g.values.size() || g.nodes.empty())
        throw std::invalid_argument("grid function: node/value length mismatch");
    RealFunction r;
    r.eval = [nodes = g.nodes, values = g.values](double x) {
        auto it = std::lower_bound(nodes.begin(), nodes.end(), x);
        if (it == nodes.begin()) return values.front();
        if (it == nodes.end()) return values.back();
        const size_t i = static_cast<size_t>(it - nodes.begin());
        const double t = (x - nodes[i - 1]) / (nodes[i] - nodes[i - 1]);
        return (1.0 - t) * values[i - 1] + t * values[i];
    };
    return r;
}

}  // namespace fht
