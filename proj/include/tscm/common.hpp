#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tscm {

using NodeId = std::uint32_t;

/// Sorted, duplicate-free list of node indices.
using NodeSet = std::vector<NodeId>;

/// Undirected edge stored with first < second.
struct Edge {
    NodeId first;
    NodeId second;

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// A community's members together with its (subspace) fitness.
struct ScoredCommunity {
    NodeSet members;
    double fitness = 0.0;

    friend bool operator==(const ScoredCommunity&, const ScoredCommunity&) = default;
};

class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Bad user input: malformed files or flags, unknown IDs, violated
/// preconditions, infeasible configurations.
class InputError : public Error {
  public:
    using Error::Error;
};

/// The input was well-formed but the computation cannot proceed
/// (isolated sample node, undefined fitness, ...).
class AlgorithmError : public Error {
  public:
    using Error::Error;
};

/// Sorts and deduplicates in place.
NodeSet make_node_set(std::vector<NodeId> nodes);

NodeSet set_union(const NodeSet& a, const NodeSet& b);
std::size_t intersection_size(const NodeSet& a, const NodeSet& b);
bool contains(const NodeSet& set, NodeId v);

}  // namespace tscm
