#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace fo52lab {

inline constexpr const char* kArtifactVersion = "0.1.0";

// One experiment outcome. Everything except runtime_ms is a pure function of
// the experiment name, seeds, and parameters.
struct ExperimentReport {
    std::string experiment;
    std::vector<std::uint64_t> seeds;
    nlohmann::ordered_json parameters = nlohmann::ordered_json::object();
    nlohmann::ordered_json results = nlohmann::ordered_json::object();
    std::vector<nlohmann::ordered_json> rows; // per-trial records
    std::string artifact_version = kArtifactVersion;
    long long runtime_ms = 0;
    unsigned anomalies = 0; // genericity surprises; nonzero maps to exit 3

    std::string to_json() const;
    // Flat per-trial table: alphabetical key union, rows sorted by "trial".
    std::string to_csv() const;
};

} // namespace fo52lab
