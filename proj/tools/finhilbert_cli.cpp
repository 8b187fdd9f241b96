#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "finhilbert/config.hpp"
#include "finhilbert/io.hpp"
#include "finhilbert/verify.hpp"

namespace {

using fht::Config;
using fht::RealFunction;
using fht::SpectralFunction;
using fht::WeightClass;
using ordered_json = nlohmann::ordered_json;

void emit(const std::optional<std::string>& output, const std::string& text) {
    if (output)
        fht::io::write_file(*output, text);
    else
        std::cout << text;
}

std::vector<double> parse_points(const std::string& spec) {
    if (spec.find(',') == std::string::npos) {
        const int n = std::stoi(spec);
        if (n < 1) throw std::invalid_argument("--points: need at least one point");
        return fht::class_nodes(WeightClass::InvSqrt, n);
    }
    std::vector<double> xs;
    std::istringstream in(spec);
    std::string tok;
    while (std::getline(in, tok, ',')) xs.push_back(std::stod(tok));
    return xs;
}

RealFunction to_real(const fht::io::ParsedFunction& pf) {
    if (pf.spectral) return fht::as_real_function(*pf.spectral);
    return fht::as_real_function(*pf.grid);
}

int cmd_transform(const Config& cfg, const std::string& input, bool hat,
                  const std::string& method, const std::string& points,
                  const std::optional<std::string>& output) {
    const auto pf = fht::io::parse_function(fht::io::read_file(input));
    // Auto picks the spectral path only when a closed-form rule exists:
    // T needs a weighted Chebyshev series, T-hat needs a flat U-series.
    const bool spectral_applies =
        pf.spectral.has_value() &&
        (hat ? pf.spectral->weight == WeightClass::Flat
             : pf.spectral->weight != WeightClass::Flat);
    const bool want_spectral =
        method == "spectral" || (method == "auto" && spectral_applies);
    fht::TransformResult result;
    if (want_spectral) {
        if (!pf.spectral)
            throw std::invalid_argument("spectral method requires spectral (JSON) input");
        result = hat ? fht::fht_hat(*pf.spectral) : fht::fht_spectral(*pf.spectral);
    } else {
        const auto xs = parse_points(points);
        const RealFunction f = to_real(pf);
        result = hat ? fht::fht_hat(f, xs, {}) : fht::fht_quadrature(f, xs, {});
    }
    if (cfg.output_format == "csv") {
        if (!std::holds_alternative<fht::GridFunction>(result.output))
            throw std::invalid_argument("csv output requires a grid result (quadrature method)");
        emit(output, fht::io::to_csv(result.grid()));
    } else {
        emit(output, fht::io::to_json(result));
    }
    return 0;
}

int cmd_invert(const Config& cfg, const std::string& input, double c,
               const std::string& points, const std::optional<std::string>& output) {
    (void)cfg;
    const auto pf = fht::io::parse_function(fht::io::read_file(input));
    fht::AirfoilSolution sol;
    if (pf.spectral && pf.spectral->weight == WeightClass::Flat) {
        sol = fht::solve_airfoil(*pf.spectral, c);
    } else {
        const auto xs = parse_points(points);
        sol = fht::solve_airfoil(to_real(pf), xs, c, {});
    }
    emit(output, fht::io::to_json(sol));
    return 0;
}

int cmd_norm(const Config& cfg, const std::string& input, const std::string& spaces,
             const std::optional<std::string>& output) {
    const auto pf = fht::io::parse_function(fht::io::read_file(input));
    const fht::RearrangementProfile prof = fht::rearrangement(to_real(pf), cfg.resolution);
    ordered_json j;
    std::istringstream in(spaces);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        if (tok == "l1")
            j["l1"] = fht::norm_l1(prof);
        else if (tok == "llogl")
            j["llogl"] = fht::norm_llogl(prof);
        else if (tok == "lloglsq")
            j["lloglsq"] = fht::norm_llogl_alpha(prof, 2.0);
        else if (tok.rfind("lp:", 0) == 0)
            j["lp:" + tok.substr(3)] = fht::norm_lp(prof, std::stod(tok.substr(3)));
        else if (tok.rfind("weak:", 0) == 0)
            j["weak:" + tok.substr(5)] = fht::weak_quasi(prof, std::stod(tok.substr(5)));
        else
            throw std::invalid_argument(
                "unknown space '" + tok + "' (valid: l1, llogl, lloglsq, lp:<p>, weak:<p>)");
    }
    emit(output, j.dump(2) + "\n");
    return 0;
}

int cmd_verify(const Config& cfg, const std::string& suite,
               const std::optional<std::string>& report_path) {
    fht::SuiteOptions opt;
    opt.resolution = cfg.resolution;
    opt.trim = cfg.trim;
    if (auto it = cfg.tol.find("parseval"); it != cfg.tol.end()) opt.tol_parseval = it->second;
    if (auto it = cfg.tol.find("poincare_bertrand"); it != cfg.tol.end())
        opt.tol_poincare_bertrand = it->second;
    std::vector<fht::VerificationReport> reports;
    const int rc = fht::run_suites(suite, cfg.seed, opt, reports);
    for (const auto& r : reports)
        std::cout << "suite " << r.suite << ": " << r.n_pass() << "/" << r.cases.size()
                  << " passed, max residual " << r.max_residual() << "\n";
    if (report_path) fht::io::write_file(*report_path, fht::io::to_json(reports));
    return rc;
}

int cmd_witness(const Config& cfg, const std::string& which,
                const std::optional<std::string>& output) {
    ordered_json j;
    if (which == "kober") {
        const RealFunction h = fht::kober_h();
        fht::DomainDiagOptions opt;
        opt.quad.interior_singularities = {0.0, 0.5};
        const auto diag = fht::optimal_domain_diag(h, 8, opt);
        const double i12 = fht::kober_transform_integral(12);
        const double i16 = fht::kober_transform_integral(16);
        j = ordered_json{{"case", "kober"},
                         {"diagnostic", ordered_json::parse(fht::io::to_json(diag))},
                         {"transform_integral_depth12", i12},
                         {"transform_integral_depth16", i16},
                         {"growth_ratio", i16 / i12}};
    } else if (which == "arcsine") {
        const SpectralFunction arcsine{WeightClass::InvSqrt, {1.0}};
        const auto spectral_image = fht::fht_spectral(arcsine).spectral();
        const RealFunction f = fht::as_real_function(arcsine);
        double quad_l1 = 0.0;
        {
            const auto xs = fht::class_nodes(WeightClass::InvSqrt, 33);
            for (double x : xs) quad_l1 += std::abs(fht::fht_point(f, x, {}));
            quad_l1 *= 2.0 / 33.0;
        }
        const auto prof = fht::rearrangement(f, cfg.resolution);
        double max_rel = 0.0;
        for (double t : {0.1, 0.5, 1.0, 1.5, 1.9}) {
            const double exact = 2.0 / std::sqrt(t * (4.0 - t));
            max_rel = std::max(max_rel,
                               std::abs(fht::profile_value(prof, t) - exact) / exact);
        }
        j = ordered_json{
            {"case", "arcsine"},
            {"spectral_image",
             ordered_json::parse(fht::io::to_json(spectral_image))},
            {"quadrature_l1_of_transform", quad_l1},
            {"rearrangement_max_rel_error_vs_2_over_sqrt_t_4mt", max_rel}};
    } else if (which == "range-gap") {
        const RealFunction h = fht::kober_h();
        RealFunction g;
        g.eval = [h](double t) { return h(t) / std::sqrt((1.0 - t) * (1.0 + t)); };
        fht::RangeCheckOptions opt;
        opt.quad.interior_singularities = {0.0, 0.5};
        const auto ev = fht::range_check(g, opt);
        j = ordered_json{{"case", "range-gap"},
                         {"evidence", ordered_json::parse(fht::io::to_json(ev))}};
    } else {
        throw std::invalid_argument("unknown witness case '" + which +
                                    "' (valid: kober, arcsine, range-gap)");
    }
    emit(output, j.dump(2) + "\n");
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finhilbert: finite Hilbert transform, airfoil inversion and "
                 "rearrangement-norm toolkit on (-1,1)"};
    app.require_subcommand(1);
    app.fallthrough();

    std::optional<std::string> config_path, output;
    std::optional<int> resolution;
    std::optional<std::uint64_t> seed;
    std::optional<std::string> format;
    app.add_option("--config", config_path, "config file (key=value); $FINHILBERT_CONFIG fallback");
    app.add_option("--resolution", resolution, "rearrangement/grid resolution (default 4096)");
    app.add_option("--seed", seed, "seed for randomized suites (default 0)");
    app.add_option("--output", output, "output file (default: stdout)");
    app.add_option("--format", format, "output format: json|csv")
        ->check(CLI::IsMember({"json", "csv"}));

    auto* t = app.add_subcommand("transform", "apply T (or T-hat with --hat)");
    std::string t_input, t_method = "auto", t_points = "33";
    bool t_hat = false;
    t->add_option("input", t_input, "SpectralFunction/GridFunction JSON or CSV")->required();
    t->add_flag("--hat", t_hat, "apply the partial inverse T-hat instead of T");
    t->add_option("--method", t_method, "spectral|quadrature (default: auto)")
        ->check(CLI::IsMember({"auto", "spectral", "quadrature"}));
    t->add_option("--points", t_points, "evaluation points: count or comma list");

    auto* inv = app.add_subcommand("invert", "solve the airfoil equation T(f) = g");
    std::string i_input, i_points = "33";
    double i_c = 0.0;
    inv->add_option("input", i_input, "right-hand side g")->required();
    inv->add_option("--c", i_c, "homogeneous coefficient of the arcsine density");
    inv->add_option("--points", i_points, "grid-path evaluation points");

    auto* nrm = app.add_subcommand("norm", "rearrangement-invariant norms");
    std::string n_input, n_spaces = "l1,llogl,lloglsq";
    nrm->add_option("input", n_input, "function to measure")->required();
    nrm->add_option("--space", n_spaces, "comma list: l1,llogl,lloglsq,lp:<p>,weak:<p>");

    auto* ver = app.add_subcommand("verify", "run identity/inequality suites");
    std::string v_suite = "all";
    std::optional<std::string> v_report;
    ver->add_option("--suite", v_suite, "suite name or 'all'");
    ver->add_option("--report", v_report, "write the JSON report here");

    auto* wit = app.add_subcommand("witness", "reproduce a named counterexample");
    std::string w_case;
    wit->add_option("--case", w_case, "kober|arcsine|range-gap")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        Config cfg = fht::resolve_config(config_path);
        if (resolution) cfg.resolution = *resolution;
        if (seed) cfg.seed = *seed;
        if (format) cfg.output_format = *format;
        cfg.validate();

        if (t->parsed()) return cmd_transform(cfg, t_input, t_hat, t_method, t_points, output);
        if (inv->parsed()) return cmd_invert(cfg, i_input, i_c, i_points, output);
        if (nrm->parsed()) return cmd_norm(cfg, n_input, n_spaces, output);
        if (ver->parsed()) return cmd_verify(cfg, v_suite, v_report);
        if (wit->parsed()) return cmd_witness(cfg, w_case, output);
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
