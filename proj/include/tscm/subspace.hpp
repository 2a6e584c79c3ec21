#pragma once

#include <cstdint>
#include <vector>

#include "tscm/metrics.hpp"
#include "tscm/parallel.hpp"

namespace tscm {

enum class PairRole { similar, random };

/// Unordered node pairs (stored first < second), no repeats.
struct PairSet {
    PairRole role = PairRole::similar;
    std::vector<Edge> pairs;
};

/// All |T|(|T|-1)/2 pairs of exemplar nodes.
PairSet exemplar_pairs(const NodeSet& exemplars);

/// `count` distinct pairs drawn uniformly without replacement from pairs of
/// distinct nodes outside `exemplars`; all such pairs when fewer exist.
PairSet sample_random_pairs(const AttributedNetwork& net, const NodeSet& exemplars,
                            std::size_t count, Rng& rng);

/// h_t(P): mean squared attribute difference over the pairs, per attribute.
std::vector<double> mean_sq_diff(const AttributedNetwork& net, const PairSet& pairs);

/// Intermediate values of one compute_subspace call.
struct SubspaceDiagnostics {
    PairSet similar;
    PairSet random;
    std::vector<double> h_similar;
    std::vector<double> h_random;
    std::vector<double> raw_weights;  // before normalization
    bool uniform_fallback = false;
};

/// Weights from the pair statistics: h_R/(h_S + 1/|P_S|) where h_S < h_R,
/// zero elsewhere, normalized; uniform if every weight is zero.
Subspace subspace_from_pair_stats(const std::vector<double>& h_similar,
                                  const std::vector<double>& h_random, std::size_t similar_pairs,
                                  std::vector<double>* raw_weights = nullptr);

/// Subspace under which the exemplar nodes are close to each other relative to
/// r*|P_S| random pairs drawn from outside the exemplar set.
///
/// Throws InputError if |T| < 2, AlgorithmError if fewer than two nodes lie
/// outside T.
Subspace compute_subspace(const AttributedNetwork& net, const NodeSet& exemplars,
                          std::uint64_t seed, SubspaceDiagnostics* diagnostics = nullptr);

}  // namespace tscm
