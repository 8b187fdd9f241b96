#include "finhilbert/rearrange.hpp"

#include "finhilbert/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace fht {

namespace {

constexpr int kEndpointSubLevels = 8;

double cell_mean(const RealFunction& f, double lo, double hi, bool toward_lo, bool toward_hi) {
    std::vector<double> sing;
    if (toward_lo) sing.push_back(lo);
    if (toward_hi) sing.push_back(hi);
    PanelScheme scheme;
    scheme.depth = kEndpointSubLevels;
    scheme.points = 8;
    const double v = integrate([&](double x) { return std::abs(f(x)); }, lo, hi, sing, scheme);
    return v / (hi - lo);
}

}  // namespace

RearrangementProfile rearrangement(const RealFunction& f, int resolution) {
    if (resolution < 8) throw std::invalid_argument("rearrangement: resolution must be >= 8");
    const double w = 2.0 / resolution;
    std::vector<double> reps(resolution);
    for (int i = 0; i < resolution; ++i) {
        const double lo = -1.0 + i * w;
        const double hi = lo + w;
        const bool sl = f.singular_left && i == 0;
        const bool sr = f.singular_right && i == resolution - 1;
        reps[i] = cell_mean(f, lo, hi, sl, sr);
        if (!std::isfinite(reps[i]))
            throw std::invalid_argument("rearrangement: non-finite interior value");
    }
    std::sort(reps.begin(), reps.end(), std::greater<double>());
    RearrangementProfile p;
    p.breakpoints.resize(resolution + 1);
    for (int i = 0; i <= resolution; ++i) p.breakpoints[i] = i * w;
    p.breakpoints.back() = 2.0;
    p.levels = std::move(reps);
    return p;
}

RearrangementProfile rearrangement(const SpectralFunction& f, int resolution) {
    return rearrangement(as_real_function(f), resolution);
}

RearrangementProfile rearrangement(const GridFunction& f, int resolution) {
    return rearrangement(as_real_function(f), resolution);
}

double profile_value(const RearrangementProfile& p, double t) {
    if (!(t > 0.0 && t <= 2.0)) throw std::domain_error("profile_value: t outside (0,2]");
    auto it = std::lower_bound(p.breakpoints.begin(), p.breakpoints.end(), t);
    size_t i = static_cast<size_t>(it - p.breakpoints.begin());
    if (i > 0) --i;
    if (i >= p.levels.size()) i = p.levels.size() - 1;
    return p.levels[i];
}

double norm_l1(const RearrangementProfile& p) {
    double s = 0.0;
    for (size_t i = 0; i < p.levels.size(); ++i)
        s += p.levels[i] * (p.breakpoints[i + 1] - p.breakpoints[i]);
    return s;
}

namespace {
inline double phi(double t) {  // antiderivative of log(2e/t)
    if (t <= 0.0) return 0.0;
    return t * std::log(2.0 * std::numbers::e / t) + t;
}
}  // namespace

double norm_llogl(const RearrangementProfile& p) {
    double s = 0.0;
    for (size_t i = 0; i < p.levels.size(); ++i)
        s += p.levels[i] * (phi(p.breakpoints[i + 1]) - phi(p.breakpoints[i]));
    return s;
}

double norm_llogl_alpha(const RearrangementProfile& p, double alpha) {
    if (alpha < 1.0) throw std::invalid_argument("norm_llogl_alpha: alpha must be >= 1");
    double s = 0.0;
    PanelScheme scheme;
    scheme.depth = 48;
    scheme.points = 16;
    for (size_t i = 0; i < p.levels.size(); ++i) {
        const double a = p.breakpoints[i], b = p.breakpoints[i + 1];
        if (p.levels[i] == 0.0) continue;
        const auto logw = [alpha](double t) {
            return std::pow(std::log(2.0 * std::numbers::e / t), alpha);
        };
        std::vector<double> sing;
        if (a == 0.0) sing.push_back(0.0);  // log^alpha singularity at t=0
        s += p.levels[i] * integrate(logw, a, b, sing, scheme);
    }
    return s;
}

double norm_lp(const RearrangementProfile& p, double pexp) {
    if (pexp < 1.0) throw std::invalid_argument("norm_lp: p must be >= 1");
    double s = 0.0;
    for (size_t i = 0; i < p.levels.size(); ++i)
        s += std::pow(p.levels[i], pexp) * (p.breakpoints[i + 1] - p.breakpoints[i]);
    return std::pow(s, 1.0 / pexp);
}

double weak_quasi(const RearrangementProfile& p, double pexp) {
    if (pexp < 1.0) throw std::invalid_argument("weak_quasi: p must be >= 1");
    double m = 0.0;
    for (size_t i = 0; i < p.levels.size(); ++i)
        m = std::max(m, std::pow(p.breakpoints[i + 1], 1.0 / pexp) * p.levels[i]);
    return m;
}

double calderon(const RearrangementProfile& p, double t) {
    if (!(t > 0.0 && t < 2.0)) throw std::domain_error("calderon: t outside (0,2)");
    double head = 0.0;  // int_0^t f*
    double tail = 0.0;  // int_t^2 f*/s ds
    for (size_t i = 0; i < p.levels.size(); ++i) {
        const double a = p.breakpoints[i], b = p.breakpoints[i + 1];
        if (b <= t) {
            head += p.levels[i] * (b - a);
        } else if (a >= t) {
            tail += p.levels[i] * std::log(b / a);
        } else {
            head += p.levels[i] * (t - a);
            tail += p.levels[i] * std::log(b / t);
        }
    }
    return head / t + tail;
}

NormReport norm_report(const RearrangementProfile& p, std::span<const double> p_list,
                       std::span<const double> weak_list) {
    NormReport r;
    r.l1 = norm_l1(p);
    r.llogl = norm_llogl(p);
    r.lloglsq = norm_llogl_alpha(p, 2.0);
    for (double q : p_list) r.lp.emplace_back(q, norm_lp(p, q));
    for (double q : weak_list) r.weak.emplace_back(q, weak_quasi(p, q));
    return r;
}

}  // namespace fht
