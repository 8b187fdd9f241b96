#include "finhilbert/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace fht::io {

using json = nlohmann::ordered_json;

namespace {

json spectral_json(const SpectralFunction& f) {
    return json{{"weight", weight_name(f.weight)}, {"coeffs", f.coeffs}};
}

json grid_json(const GridFunction& g) {
    return json{{"nodes", g.nodes}, {"values", g.values}};
}

json output_json(const std::variant<SpectralFunction, GridFunction>& v) {
    if (std::holds_alternative<SpectralFunction>(v))
        return spectral_json(std::get<SpectralFunction>(v));
    return grid_json(std::get<GridFunction>(v));
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string to_json(const SpectralFunction& f) { return dump(spectral_json(f)); }
std::string to_json(const GridFunction& g) { return dump(grid_json(g)); }

std::string to_json(const RearrangementProfile& p) {
    return dump(json{{"breakpoints", p.breakpoints}, {"levels", p.levels}});
}

std::string to_json(const NormReport& r) {
    json j{{"l1", r.l1}, {"llogl", r.llogl}, {"lloglsq", r.lloglsq}};
    json lp = json::object(), weak = json::object();
    for (const auto& [p, v] : r.lp) lp[std::to_string(p)] = v;
    for (const auto& [p, v] : r.weak) weak[std::to_string(p)] = v;
    if (!lp.empty()) j["lp"] = lp;
    if (!weak.empty()) j["weak"] = weak;
    return dump(j);
}

std::string to_json(const AirfoilSolution& s) {
    return dump(json{{"particular", output_json(s.particular)},
                     {"c", s.homogeneous_coeff},
                     {"residual_l1", s.residual_l1}});
}

std::string to_json(const MembershipDiagnostic& d) {
    return dump(json{{"catalogue_depth", d.catalogue_depth},
                     {"sup_by_depth", d.sup_by_depth},
                     {"sup_lower_bound", d.sup_lower_bound},
                     {"growth_flag", d.growth_flag},
                     {"skipped_sets", d.skipped_sets}});
}

std::string to_json(const RangeEvidence& e) {
    return dump(json{{"in_range_evidence", e.in_range_evidence},
                     {"out_of_range_evidence", e.out_of_range_evidence},
                     {"roundtrip_residual", e.roundtrip_residual},
                     {"llogl_coarse", e.llogl_coarse},
                     {"llogl_fine", e.llogl_fine},
                     {"growth_ratio", e.growth_ratio},
                     {"note", e.note}});
}

std::string to_json(const TransformResult& r) {
    json j{{"output", output_json(r.output)},
           {"method", r.method == TransformMethod::Spectral ? "spectral" : "quadrature"}};
    if (r.residual_meta) j["residual_meta"] = *r.residual_meta;
    return dump(j);
}

namespace {

json report_json(const VerificationReport& r) {
    json cases = json::array();
    for (const auto& c : r.cases)
        cases.push_back(json{{"descriptor", c.descriptor},
                             {"lhs", c.lhs},
                             {"rhs", c.rhs},
                             {"residual", c.residual},
                             {"tolerance", c.tolerance},
                             {"pass", c.pass}});
    return json{{"suite", r.suite},
                {"seed", r.seed},
                {"cases", cases},
                {"summary", json{{"n_pass", r.n_pass()},
                                 {"n_fail", r.n_fail()},
                                 {"max_residual", r.max_residual()}}}};
}

}  // namespace

std::string to_json(const VerificationReport& r) { return dump(report_json(r)); }

std::string to_json(const std::vector<VerificationReport>& rs) {
    json arr = json::array();
    for (const auto& r : rs) arr.push_back(report_json(r));
    return dump(arr);
}

SpectralFunction spectral_from_json(const std::string& text) {
    const json j = json::parse(text);
    SpectralFunction f;
    f.weight = weight_from_name(j.at("weight").get<std::string>());
    f.coeffs = j.at("coeffs").get<std::vector<double>>();
    if (f.coeffs.empty()) throw std::invalid_argument("spectral JSON: coeffs must be non-empty");
    return f;
}

GridFunction grid_from_json(const std::string& text) {
    const json j = json::parse(text);
    GridFunction g;
    g.nodes = j.at("nodes").get<std::vector<double>>();
    g.values = j.at("values").get<std::vector<double>>();
    if (g.nodes.size() != g.values.size())
        throw std::invalid_argument("grid JSON: nodes/values length mismatch");
    return g;
}

std::string to_csv(const GridFunction& g) {
    std::ostringstream out;
    out << "node,value\n";
    out.precision(17);
    for (size_t i = 0; i < g.nodes.size(); ++i) out << g.nodes[i] << "," << g.values[i] << "\n";
    return out.str();
}

GridFunction grid_from_csv(const std::string& text) {
    GridFunction g;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto comma = line.find(',');
        if (comma == std::string::npos)
            throw std::invalid_argument("CSV: expected two comma-separated columns");
        try {
            g.nodes.push_back(std::stod(line.substr(0, comma)));
            g.values.push_back(std::stod(line.substr(comma + 1)));
        } catch (const std::exception&) {
            if (g.nodes.empty() && g.values.empty()) continue;  // header line
            throw std::invalid_argument("CSV: non-numeric row: " + line);
        }
    }
    if (g.nodes.size() != g.values.size() || g.nodes.empty())
        throw std::invalid_argument("CSV: no data rows");
    return g;
}

ParsedFunction parse_function(const std::string& text) {
    ParsedFunction out;
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        const json j = json::parse(text);
        if (j.contains("weight"))
            out.spectral = spectral_from_json(text);
        else
            out.grid = grid_from_json(text);
    } else {
        out.grid = grid_from_csv(text);
    }
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << content;
}

}  // namespace fht::io
