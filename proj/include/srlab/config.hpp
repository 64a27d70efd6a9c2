// config.hpp — run configuration shared by the command-line tool and tests.
//
// Configs are JSON; a small TOML subset is accepted as sugar and converted to
// the same JSON before parsing.  Unknown keys are rejected everywhere so a
// typo cannot silently fall back to a default.

#pragma once

#include "srlab/model_spec.hpp"

#include <json.hpp>

#include <limits>
#include <string>
#include <vector>

namespace srlab {

struct SweepConfig {
    // "omega", "coupling_scale", "lambda" or "temperature"
    std::string parameter{"omega"};
    std::vector<double> values;
    int fock_cutoff{-1};   // -1: adaptive search per point
    double tail_tol{1e-8}; // population allowed in the top two Fock levels
};

struct ExponentConfig {
    double window_lo{1e-4};
    double window_hi{1e-2};
    int points{25};
};

struct VerifyConfig {
    int fock_cutoff{8};
    std::vector<double> betas{0.1, 1.0, 10.0};
    int chi_window{4096};
};

// deliberate failure injection, so tests can watch the error paths work
struct TestingHooks {
    std::vector<int> fail_at_indices; // sweep points forced to report failure
    bool corrupt_phase{false};        // run the sector sum with the wrong weight
};

struct RunConfig {
    ModelSpec model;
    // inverse temperature; +inf is the ground-state sentinel (set directly,
    // via "beta": "inf", or via "temperature": 0)
    double beta{std::numeric_limits<double>::infinity()};
    SweepConfig sweep;
    ExponentConfig exponent;
    VerifyConfig verify;
    TestingHooks testing;
    // set from the command line, recorded in the manifest; not a config key
    unsigned long long seed{0};
};

// Parse a config from JSON; throws std::invalid_argument with the offending
// key on any unknown or malformed field.
RunConfig config_from_json(const nlohmann::json& j);

// Echo used for the manifest; stable key order, beta = inf rendered as "inf".
nlohmann::json config_to_json(const RunConfig& cfg);

// Convert the supported TOML subset ([section] headers, key = value with
// numbers, booleans, "strings", inf, and flat arrays, # comments) to JSON.
nlohmann::json toml_lite_to_json(const std::string& text);

// Load a config file, dispatching on the .json / .toml extension.
RunConfig load_config(const std::string& path);

} // namespace srlab
