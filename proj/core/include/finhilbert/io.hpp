#pragma once

#include "finhilbert/inversion.hpp"
#include "finhilbert/verify.hpp"

#include <optional>
#include <string>

// JSON/CSV serialization.  All JSON output has stable field order and uses
// shortest-roundtrip number formatting, so equal values serialize to equal
// bytes.

namespace fht::io {

std::string to_json(const SpectralFunction& f);
std::string to_json(const GridFunction& g);
std::string to_json(const RearrangementProfile& p);
std::string to_json(const NormReport& r);
std::string to_json(const AirfoilSolution& s);
std::string to_json(const MembershipDiagnostic& d);
std::string to_json(const RangeEvidence& e);
std::string to_json(const TransformResult& r);
std::string to_json(const VerificationReport& r);
std::string to_json(const std::vector<VerificationReport>& rs);

SpectralFunction spectral_from_json(const std::string& text);
GridFunction grid_from_json(const std::string& text);

// CSV grid format: two columns node,value; header line optional.
std::string to_csv(const GridFunction& g);
GridFunction grid_from_csv(const std::string& text);

// Parses JSON (spectral or grid) or CSV; exactly one member is set.
struct ParsedFunction {
    std::optional<SpectralFunction> spectral;
    std::optional<GridFunction> grid;
};
ParsedFunction parse_function(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace fht::io
