#pragma once

#include <cstdint>
#include <string>

#include "fo52/fobracket.hpp"
#include "labcli/report.hpp"

namespace fo52lab {

// Experiment drivers. Hard assertions (identities of the construction)
// throw fo52::Error subclasses (CLI exit 2); genericity surprises only bump
// report.anomalies (exit 3). All drivers are deterministic in their
// arguments.

ExperimentReport run_jacobi(std::uint64_t seed);
ExperimentReport run_compat(std::uint64_t seed, unsigned k);
ExperimentReport run_conjecture_d(std::uint64_t seed, const fo52::Pi52Map& m, unsigned threads);
ExperimentReport run_span(std::uint64_t seed, const std::string& family, unsigned n,
                          unsigned threads);
ExperimentReport run_stratify(std::uint64_t seed, unsigned points);
ExperimentReport run_tangency(std::uint64_t seed);
ExperimentReport run_pi52_build(std::uint64_t grid_seed, unsigned n_samples, unsigned threads,
                                const std::string& matrix_path);
ExperimentReport run_pi52_verify(const std::string& matrix_path);

} // namespace fo52lab
