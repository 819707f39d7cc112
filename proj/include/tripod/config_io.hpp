#pragma once

#include <cmath>
#include <cstdio>
#include <fstream>
#include <string>
#include <utility>

#include <json.hpp>

#include "tripod/errors.hpp"
#include "tripod/params.hpp"

namespace tripod {

// The JSON config schema: keys are exactly the TripodParams field names, all
// optional; values merge over the quantum baseline. Unknown keys and
// non-numeric values are rejected by name.
inline TripodParams params_from_json(const nlohmann::json& j) {
    if (!j.is_object()) {
        throw ConfigError("config root must be a JSON object of parameter fields");
    }
    TripodParams p = quantum_preset();
    static const std::pair<const char*, double TripodParams::*> fields[] = {
        {"omega_p", &TripodParams::omega_p},
        {"omega_t", &TripodParams::omega_t},
        {"omega_c", &TripodParams::omega_c},
        {"delta1", &TripodParams::delta1},
        {"delta2", &TripodParams::delta2},
        {"delta3", &TripodParams::delta3},
        {"gamma_10", &TripodParams::gamma_10},
        {"gamma_20", &TripodParams::gamma_20},
        {"gamma_30", &TripodParams::gamma_30},
        {"gamma_12", &TripodParams::gamma_12},
        {"gamma_13", &TripodParams::gamma_13},
        {"gamma_23", &TripodParams::gamma_23},
        {"gamma_si", &TripodParams::gamma_si},
        {"density", &TripodParams::density},
        {"length", &TripodParams::length},
        {"lambda_p", &TripodParams::lambda_p},
        {"lambda_t", &TripodParams::lambda_t},
        {"tau_p", &TripodParams::tau_p},
        {"tau_t", &TripodParams::tau_t},
        {"zeeman_split", &TripodParams::zeeman_split},
    };
    for (const auto& item : j.items()) {
        bool known = false;
        for (const auto& [name, member] : fields) {
            if (item.key() == name) {
                if (!item.value().is_number()) {
                    throw ConfigError("config key '" + item.key() + "' must be a number");
                }
                p.*member = item.value().get<double>();
                known = true;
                break;
            }
        }
        if (!known) {
            throw ConfigError("unknown config key '" + item.key() + "'");
        }
    }
    p.validate();
    return p;
}

inline TripodParams load_params_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open config file '" + path + "'");
    }
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ConfigError("config file '" + path + "': " + e.what());
    }
    return params_from_json(j);
}

inline TripodParams preset_by_name(const std::string& name) {
    if (name == "quantum") return quantum_preset();
    if (name == "classical") return classical_preset();
    throw ConfigError("unknown preset '" + name + "' (expected quantum or classical)");
}

// 12 significant digits: enough to round-trip golden files, short enough to
// stay platform-stable with deterministic algorithms.
inline std::string fmt12(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return std::string(buf);
}

// CSV cell: NaN prints as an empty field.
inline std::string csv_cell(double v) {
    return std::isnan(v) ? std::string() : fmt12(v);
}

// JSON scalar: non-finite values print as null.
inline std::string json_number(double v) {
    return std::isfinite(v) ? fmt12(v) : std::string("null");
}

} // namespace tripod
