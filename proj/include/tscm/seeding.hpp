#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "tscm/metrics.hpp"

namespace tscm {

/// Edge weights mirroring a network's edge set. Non-edges weigh zero.
/// Holds a pointer to the network, which must outlive it.
class WeightedAdjacency {
  public:
    /// `edge_weights[i]` belongs to net.edges()[i]; every weight must be
    /// finite and positive.
    static WeightedAdjacency from_edge_weights(const AttributedNetwork& net,
                                               std::vector<double> edge_weights);

    const AttributedNetwork& network() const { return *net_; }
    std::size_t node_count() const { return net_->node_count(); }

    std::span<const double> edge_weights() const { return edge_weights_; }
    /// Weights aligned with network().neighbors(v).
    std::span<const double> neighbor_weights(NodeId v) const {
        return {slot_weights_.data() + net_->adjacency_offset(v), net_->degree(v)};
    }
    double weight(NodeId v, NodeId u) const;
    double weighted_degree(NodeId v) const { return weighted_degree_[v]; }

    double max_weight() const { return max_; }
    /// Mean over edges (not over all n^2 matrix entries).
    double mean_weight() const { return mean_; }

  private:
    const AttributedNetwork* net_ = nullptr;
    std::vector<double> edge_weights_;
    std::vector<double> slot_weights_;
    std::vector<double> weighted_degree_;
    double max_ = 0.0;
    double mean_ = 0.0;
};

/// Weighs every edge by the subspace similarity of its endpoints.
WeightedAdjacency reweight(const AttributedNetwork& net, const Subspace& l, unsigned threads = 1);

struct SeedSet {
    std::vector<NodeSet> seeds;
    std::vector<Edge> backbone;
    double threshold = 0.0;
};

/// Backbone = edges with weight >= (max + mean) / 2; seeds = label-propagation
/// communities of the backbone. Throws AlgorithmError on an edgeless network.
SeedSet construct_seed_set(const WeightedAdjacency& weights, std::uint64_t seed);

/// Reweights under `l`, then builds the seed set.
std::pair<SeedSet, WeightedAdjacency> construct_seed_set(const AttributedNetwork& net,
                                                         const Subspace& l, std::uint64_t seed,
                                                         unsigned threads = 1);

}  // namespace tscm
