#pragma once

#include <cstdint>
#include <filesystem>
#include <string>

#include "moeadcht/cht.hpp"
#include "moeadcht/moead.hpp"
#include "moeadcht/problem.hpp"

#include <nlohmann/json_fwd.hpp>

namespace moeadcht {

/// Fully resolved experiment description. Loading materializes every default
/// so the manifest alone reproduces the run.
struct ExperimentConfig {
    std::string problem_name;
    std::string cht_label;   // name as configured ("static-high", "dynamic", ...)
    ChtStrategy strategy;
    MoeadParams moead;
    int repetitions = 10;
    std::uint64_t base_seed = 1;
    std::string output_dir = "results";

    ProblemDefinition problem() const;
};

/// Parses and validates a JSON config. Unknown keys and unresolvable
/// problem/CHT names are errors carrying the offending key path.
ExperimentConfig load_config(const std::filesystem::path& path);
ExperimentConfig config_from_json(const nlohmann::json& doc);

/// Canonical JSON of the resolved config, every default materialized.
nlohmann::json resolved_json(const ExperimentConfig& config);

/// Strategy registry: builds a CHT from its config name plus optional
/// parameter object. Known names: none, static, static-low, static-high,
/// multistaged, dynamic, dynamic-slow, dynamic-fast, selfadaptive,
/// threestage. Throws std::invalid_argument on unknown names or parameters.
ChtStrategy cht_by_name(const std::string& name, const nlohmann::json* params,
                        int n_constraints);

/// Names cht_by_name accepts, in listing order.
std::vector<std::string> cht_names();

/// FNV-1a hash of a string, hex-encoded; links outputs to their manifest.
std::string fnv1a_hex(const std::string& text);

inline constexpr const char* kVersionTag = "0.1.0";

} // namespace moeadcht
