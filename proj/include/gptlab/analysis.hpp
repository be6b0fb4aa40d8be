#pragma once

#include "gptlab/gpt_core.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>

namespace gptlab {

struct AnalysisOptions {
    std::size_t p6_samples = 1000;
    std::uint64_t seed = 0;
};

/// Everything the analyze command reports about one space. Classification:
/// "classical" iff the space is a simplex, "qubit-like-ball" for balls,
/// "other" otherwise.
struct AnalysisReport {
    std::size_t dim = 0;
    std::optional<std::size_t> num_pure_states;  // nullopt: infinitely many
    bool simplex = false;
    std::size_t max_distinguishable = 0;
    bool p5 = false;
    bool isogonal = false;
    bool p6_holds = false;
    std::optional<Vec> p6_counterexample;
    Vec invariant_state;
    bool invariant_state_unique = false;
    std::optional<std::size_t> automorphism_group_order;  // nullopt: continuous
    std::optional<double> invariant_state_entropy;        // nullopt: unsupported
    std::string classification;
};

AnalysisReport analyze(const StateSpace& space, const AnalysisOptions& options = {});

nlohmann::ordered_json report_to_json(const AnalysisReport& report);
std::string report_to_text(const AnalysisReport& report);

}  // namespace gptlab
