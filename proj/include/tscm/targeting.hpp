#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "tscm/subspace.hpp"

namespace tscm {

/// Subspace of one neighborhood community of `owner`, computed from the
/// community plus the owner itself.
struct CandidateSubspace {
    Subspace subspace;
    NodeSet exemplars;
    NodeId owner;
};

/// One candidate per neighborhood community of v, in neighborhood-community
/// order. An exemplar set that leaves fewer than two other nodes gets the
/// uniform subspace; candidates whose subspace cannot be computed otherwise are
/// skipped. Throws AlgorithmError if v has no neighbors.
std::vector<CandidateSubspace> candidate_subspaces(const AttributedNetwork& net, NodeId v,
                                                   std::uint64_t seed, unsigned threads = 1);

struct TargetSubspace {
    Subspace subspace;
    NodeSet exemplars;
    /// Candidates whose exemplar sets were merged (prototypes first).
    std::vector<CandidateSubspace> selected;
    /// Cosine similarity of the two prototype candidates.
    double prototype_similarity = 0.0;
};

/// Extends the two samples to an exemplar set by picking the pair of
/// candidates (one per sample) with maximal cosine similarity, then computes
/// the subspace of the merged exemplar set. Ties go to the lexicographically
/// smallest pair of exemplar sets.
TargetSubspace mine_target_subspace(const AttributedNetwork& net, NodeId s1, NodeId s2,
                                    std::uint64_t seed, unsigned threads = 1);

/// Variant for three or more samples: two prototypes are drawn at random, and
/// every other sample contributes its candidate with the largest summed
/// similarity to the two prototype subspaces.
TargetSubspace mine_target_subspace_multi(const AttributedNetwork& net,
                                          std::span<const NodeId> samples, std::uint64_t seed,
                                          unsigned threads = 1);

struct EgoCommunity {
    Subspace subspace;
    NodeSet exemplars;
    ScoredCommunity community;
};

/// For every neighborhood community of v: its subspace, and the community
/// grown from (neighborhood community + v) on the network reweighted under
/// that subspace. No redundancy filtering.
std::vector<EgoCommunity> ego_analysis(const AttributedNetwork& net, NodeId v, std::uint64_t seed,
                                       unsigned threads = 1);

}  // namespace tscm
