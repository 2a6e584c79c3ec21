#include "tscm/seeding.hpp"

#include <algorithm>
#include <cmath>

#include "tscm/lpa.hpp"
#include "tscm/parallel.hpp"

namespace tscm {

WeightedAdjacency WeightedAdjacency::from_edge_weights(const AttributedNetwork& net,
                                                       std::vector<double> edge_weights) {
    if (edge_weights.size() != net.edge_count())
        throw InputError("edge weight count does not match edge count");
    for (double w : edge_weights)
        if (!std::isfinite(w) || w <= 0.0) throw InputError("edge weights must be finite and positive");

    WeightedAdjacency out;
    out.net_ = &net;
    out.edge_weights_ = std::move(edge_weights);
    out.slot_weights_.assign(2 * net.edge_count(), 0.0);
    out.weighted_degree_.assign(net.node_count(), 0.0);

    // Edges are sorted by (first, second) and neighbor lists are sorted, so a
    // node's lower neighbors come first (filled as `second`) followed by its
    // upper neighbors (filled as `first`), both in edge order.
    std::vector<std::size_t> lower(net.node_count());
    std::vector<std::size_t> upper(net.node_count());
    for (NodeId v = 0; v < net.node_count(); ++v) {
        const auto nbrs = net.neighbors(v);
        lower[v] = net.adjacency_offset(v);
        upper[v] = lower[v] + static_cast<std::size_t>(
                                  std::lower_bound(nbrs.begin(), nbrs.end(), v) - nbrs.begin());
    }
    const auto edges = net.edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const double w = out.edge_weights_[i];
        out.slot_weights_[upper[edges[i].first]++] = w;
        out.slot_weights_[lower[edges[i].second]++] = w;
    }
    for (NodeId v = 0; v < net.node_count(); ++v) {
        double sum = 0.0;
        for (double w : out.neighbor_weights(v)) sum += w;
        out.weighted_degree_[v] = sum;
    }

    if (!out.edge_weights_.empty()) {
        double sum = 0.0;
        for (double w : out.edge_weights_) {
            out.max_ = std::max(out.max_, w);
            sum += w;
        }
        out.mean_ = sum / static_cast<double>(out.edge_weights_.size());
    }
    return out;
}

double WeightedAdjacency::weight(NodeId v, NodeId u) const {
    const auto slot = net_->neighbor_slot(v, u);
    return slot ? neighbor_weights(v)[*slot] : 0.0;
}

WeightedAdjacency reweight(const AttributedNetwork& net, const Subspace& l, unsigned threads) {
    if (l.size() != net.attribute_count()) throw InputError("subspace length does not match network");
    const auto edges = net.edges();
    std::vector<double> weights(edges.size());
    const auto& kernel = kernels::active();
    constexpr std::size_t kBlock = 4096;
    const std::size_t blocks = (edges.size() + kBlock - 1) / kBlock;
    parallel_for(blocks, threads, [&](std::size_t b) {
        const std::size_t end = std::min(edges.size(), (b + 1) * kBlock);
        for (std::size_t i = b * kBlock; i < end; ++i) {
            const double sq = kernel.weighted_sq_distance(net.codes(edges[i].first).data(),
                                                          net.codes(edges[i].second).data(),
                                                          l.weights().data(), net.layout());
            weights[i] = std::exp(-std::sqrt(sq));
        }
    });
    return WeightedAdjacency::from_edge_weights(net, std::move(weights));
}

SeedSet construct_seed_set(const WeightedAdjacency& weights, std::uint64_t seed) {
    const AttributedNetwork& net = weights.network();
    if (net.edge_count() == 0) throw AlgorithmError("cannot build seeds on an edgeless network");

    SeedSet out;
    out.threshold = 0.5 * (weights.max_weight() + weights.mean_weight());
    const auto edges = net.edges();
    const auto w = weights.edge_weights();
    Subgraph backbone;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        if (w[i] >= out.threshold) {
            out.backbone.push_back(edges[i]);
            backbone.nodes.push_back(edges[i].first);
            backbone.nodes.push_back(edges[i].second);
        }
    }
    backbone.nodes = make_node_set(std::move(backbone.nodes));
    backbone.edges = out.backbone;
    out.seeds = label_propagation(backbone, seed).communities();
    return out;
}

std::pair<SeedSet, WeightedAdjacency> construct_seed_set(const AttributedNetwork& net,
                                                         const Subspace& l, std::uint64_t seed,
                                                         unsigned threads) {
    if (net.edge_count() == 0) throw AlgorithmError("cannot build seeds on an edgeless network");
    WeightedAdjacency weights = reweight(net, l, threads);
    SeedSet seeds = construct_seed_set(weights, seed);
    return {std::move(seeds), std::move(weights)};
}

}  // namespace tscm
