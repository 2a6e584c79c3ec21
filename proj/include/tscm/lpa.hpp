#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "tscm/network.hpp"

namespace tscm {

/// Edge set over a subset of nodes (global indices). Nodes may be isolated.
struct Subgraph {
    std::vector<NodeId> nodes;
    std::vector<Edge> edges;
};

/// Community label per subgraph node. Labels are node indices, so the label
/// order is the node order.
class Partition {
  public:
    Partition() = default;
    Partition(std::vector<NodeId> nodes, std::vector<NodeId> labels, std::size_t iterations = 0);

    std::span<const NodeId> nodes() const { return nodes_; }
    std::span<const NodeId> labels() const { return labels_; }
    NodeId label_of(NodeId v) const;
    std::size_t iterations() const { return iterations_; }
    bool empty() const { return nodes_.empty(); }

    /// Node sets grouped by label, ordered by their smallest member.
    std::vector<NodeSet> communities() const;

  private:
    std::vector<NodeId> nodes_;   // sorted
    std::vector<NodeId> labels_;  // parallel to nodes_
    std::size_t iterations_ = 0;
};

inline constexpr std::size_t kLpaMaxIterations = 100;

/// Asynchronous label propagation. Every node starts with its own label; each
/// iteration visits the nodes in a freshly shuffled order and moves each one
/// to the most frequent label among its neighbors (smallest label on ties).
/// Stops after a pass without changes or kLpaMaxIterations passes.
Partition label_propagation(const Subgraph& graph, std::uint64_t seed);

/// True when no node would change label under the update rule.
bool is_stable(const Subgraph& graph, const Partition& partition);

/// Neighbors of v and the edges among them; v itself excluded.
Subgraph neighborhood_network(const AttributedNetwork& net, NodeId v);

/// Label-propagation communities of v's neighborhood network, singletons
/// included. Empty when v has no neighbors.
std::vector<NodeSet> detect_nei_community(const AttributedNetwork& net, NodeId v,
                                          std::uint64_t seed);

}  // namespace tscm
