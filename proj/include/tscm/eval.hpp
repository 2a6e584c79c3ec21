#pragma once

#include <cstdint>
#include <vector>

#include <json.hpp>

#include "tscm/benchgen.hpp"
#include "tscm/pipeline.hpp"

namespace tscm {

/// Set-overlap F1; 0 when detected is empty or disjoint. Throws InputError on
/// an empty truth set.
double f1(const NodeSet& truth, const NodeSet& detected);

struct QualityQ {
    std::vector<double> per_target;  // best F1 of each truth set
    double q = 0.0;                  // their mean
};

QualityQ quality_q(const std::vector<NodeSet>& truth, const std::vector<NodeSet>& detected);

double quality_ss(const Subspace& mined, const Subspace& planted);

struct EvalReport {
    double ss = 0.0;
    QualityQ quality;
    nlohmann::json meta = nlohmann::json::object();
};

nlohmann::json to_json(const EvalReport& report);

/// What a trial is scored against.
struct GroundTruth {
    std::vector<NodeSet> targets;
    Subspace subspace;
};

GroundTruth ground_truth(const BenchmarkInstance& instance);

struct TrialOptions {
    std::size_t trials = 20;
    std::uint64_t seed = 1;
    MiningOptions mining;
};

struct TrialResult {
    std::size_t target = 0;  // index into GroundTruth::targets
    NodeId s1 = 0;
    NodeId s2 = 0;
    double ss = 0.0;
    double q = 0.0;
    double elapsed_ms = 0.0;
    bool failed = false;  // the run raised AlgorithmError; scored 0
};

struct TrialSummary {
    std::vector<TrialResult> trials;
    double mean_ss = 0.0;
    double sd_ss = 0.0;
    double mean_q = 0.0;
    double sd_q = 0.0;
    double max_ms = 0.0;
};

/// Repeated mining runs, each from two distinct random members of a random
/// target community. Deterministic in options.seed.
TrialSummary run_trials(const AttributedNetwork& net, const GroundTruth& truth,
                        const TrialOptions& options);

nlohmann::json to_json(const TrialSummary& summary, bool with_timing);

}  // namespace tscm
