#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "tscm/diversity.hpp"
#include "tscm/metrics.hpp"

namespace tscm {

struct MiningOptions {
    double beta = kDefaultRedundancy;
    std::uint64_t seed = 42;
    /// Worker threads; 0 = all cores. Results do not depend on it.
    unsigned threads = 1;
};

struct RunInfo {
    std::uint64_t seed = 0;
    std::size_t seed_count = 0;
    std::size_t expanded_count = 0;
    std::size_t skipped_seeds = 0;
    std::size_t backbone_edges = 0;
    double backbone_threshold = 0.0;
    double subspace_ms = 0.0;
    double seeding_ms = 0.0;
    double expansion_ms = 0.0;
    double total_ms = 0.0;
};

struct MiningResult {
    Subspace subspace;
    NodeSet exemplars;
    /// Diverse target communities, in selection order (decreasing fitness).
    std::vector<ScoredCommunity> communities;
    RunInfo info;
};

/// Target subspace from two samples, then seeds on the reweighted network,
/// hill-climbing expansion and redundancy filtering.
MiningResult tscm(const AttributedNetwork& net, NodeId s1, NodeId s2,
                  const MiningOptions& options = {});

/// Two samples run the two-sample variant; three or more the multi-sample one.
MiningResult tscm(const AttributedNetwork& net, std::span<const NodeId> samples,
                  const MiningOptions& options = {});

}  // namespace tscm
