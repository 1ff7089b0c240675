#pragma once

#include <qpl/json_io.hpp>

#include <cstdlib>
#include <fstream>

namespace qpl::cli {

/// Runtime configuration: defaults, then the JSON file named by the CONFIG
/// environment variable, then command-line flags (handled by the caller).
struct Config {
    Geometry geometry = Geometry::ProjLine;
    Int truncation = 32;
    double tolerance = 1e-12;
    bool eta_sign_flip = false;
};

inline void apply_config_json(Config& config, const json& j) {
    if (j.contains("geometry"))
        config.geometry = geometry_from_string(j.at("geometry").get<std::string>());
    if (j.contains("truncation")) config.truncation = j.at("truncation").get<Int>();
    if (j.contains("tolerance")) config.tolerance = j.at("tolerance").get<double>();
    if (j.contains("eta_sign_flip"))
        config.eta_sign_flip = j.at("eta_sign_flip").get<bool>();
}

inline Config load_config_from_env() {
    Config config;
    const char* path = std::getenv("CONFIG");
    if (path == nullptr || *path == '\0') return config;
    std::ifstream in(path);
    if (!in) throw BadParameter(std::string("cannot open config file ") + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw BadParameter(std::string("malformed config file: ") + e.what());
    }
    apply_config_json(config, j);
    return config;
}

inline void validate(const Config& config) {
    if (config.truncation < 2) throw BadParameter("truncation must be >= 2");
    if (config.tolerance < 0) throw BadParameter("tolerance must be >= 0");
}

}  // namespace qpl::cli
