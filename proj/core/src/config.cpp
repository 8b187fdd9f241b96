#include "finhilbert/config.hpp"

#include <cstdlib>
#include <fstream>
#include <stdexcept>

namespace fht {

void Config::validate() const {
    if (resolution < 64) throw std::invalid_argument("config: resolution must be >= 64");
    if (spectral_n < 4) throw std::invalid_argument("config: spectral_n must be >= 4");
    if (!(trim > 0.0 && trim < 1.0)) throw std::invalid_argument("config: trim must be in (0,1)");
    if (output_format != "json" && output_format != "csv")
        throw std::invalid_argument("config: output_format must be json or csv");
}

void config_apply(Config& cfg, const std::string& key, const std::string& value) {
    try {
        if (key == "resolution")
            cfg.resolution = std::stoi(value);
        else if (key == "spectral_n")
            cfg.spectral_n = std::stoi(value);
        else if (key == "trim")
            cfg.trim = std::stod(value);
        else if (key == "seed")
            cfg.seed = std::stoull(value);
        else if (key == "output_format")
            cfg.output_format = value;
        else if (key.rfind("tol.", 0) == 0)
            cfg.tol[key.substr(4)] = std::stod(value);
        else
            throw std::invalid_argument("config: unknown key: " + key);
    } catch (const std::invalid_argument&) {
        throw;
    } catch (const std::exception&) {
        throw std::invalid_argument("config: bad value for " + key + ": " + value);
    }
}

Config load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file: " + path);
    Config cfg;
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        const auto last = line.find_last_not_of(" \t\r");
        line = line.substr(first, last - first + 1);
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config: expected key=value, got: " + line);
        auto strip = [](std::string s) {
            const auto a = s.find_first_not_of(" \t");
            const auto b = s.find_last_not_of(" \t");
            return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
        };
        config_apply(cfg, strip(line.substr(0, eq)), strip(line.substr(eq + 1)));
    }
    cfg.validate();
    return cfg;
}

Config resolve_config(const std::optional<std::string>& flag_path) {
    if (flag_path) return load_config(*flag_path);
    if (const char* env = std::getenv("FINHILBERT_CONFIG")) return load_config(env);
    return {};
}

}  // namespace fht
