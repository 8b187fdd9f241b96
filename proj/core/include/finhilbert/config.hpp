#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

namespace fht {

// Run configuration shared by the CLI commands.  File format is plain
// key=value lines ('#' comments); flags override file values.
struct Config {
    int resolution = 4096;
    int spectral_n = 64;
    double trim = 0.9;
    std::uint64_t seed = 0;
    std::string output_format = "json";      // "json" | "csv"
    std::map<std::string, double> tol;       // per-suite overrides, key = suite name

    void validate() const;  // throws std::invalid_argument on bad values
};

// Applies one key=value assignment (the file loader and flag parser share it).
void config_apply(Config& cfg, const std::string& key, const std::string& value);

Config load_config(const std::string& path);

// Flag path if given, else $FINHILBERT_CONFIG, else defaults.
Config resolve_config(const std::optional<std::string>& flag_path);

}  // namespace fht
