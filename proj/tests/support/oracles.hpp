#pragma once

// Brute-force reference implementations shared by the unit and acceptance
// tests. They recompute everything from the adjacency on every call.

#include <algorithm>
#include <optional>
#include <random>
#include <vector>

#include "tscm/diversity.hpp"
#include "tscm/expansion.hpp"

namespace tscm::oracle {

/// invol / vol from scratch; nullopt when the members have no incident edge.
inline std::optional<double> fitness(const WeightedAdjacency& w, const std::vector<bool>& in) {
    const AttributedNetwork& net = w.network();
    double internal = 0.0;
    double volume = 0.0;
    std::size_t incident = 0;
    for (NodeId v = 0; v < net.node_count(); ++v) {
        if (!in[v]) continue;
        const auto nbrs = net.neighbors(v);
        const auto weights = w.neighbor_weights(v);
        for (std::size_t i = 0; i < nbrs.size(); ++i) {
            volume += weights[i];
            ++incident;
            if (in[nbrs[i]]) internal += weights[i];
        }
    }
    if (incident == 0) return std::nullopt;
    return internal / volume;
}

inline std::vector<bool> indicator(std::size_t n, const NodeSet& set) {
    std::vector<bool> in(n, false);
    for (NodeId v : set) in[v] = true;
    return in;
}

struct Move {
    Action action;
    double gain;
};

/// Every admissible single add/remove with its exact fitness change.
inline std::vector<Move> all_moves(const WeightedAdjacency& w, const std::vector<bool>& in) {
    const AttributedNetwork& net = w.network();
    const double current = *fitness(w, in);
    const auto size = static_cast<std::size_t>(std::count(in.begin(), in.end(), true));
    std::vector<Move> out;
    for (NodeId v = 0; v < net.node_count(); ++v) {
        std::vector<bool> next = in;
        next[v] = !in[v];
        if (in[v]) {
            if (size == 1) continue;
            if (const auto f = fitness(w, next)) out.push_back({{ActionKind::remove, v}, *f - current});
        } else {
            const auto nbrs = net.neighbors(v);
            const bool adjacent = std::any_of(nbrs.begin(), nbrs.end(), [&](NodeId u) { return in[u]; });
            if (adjacent) out.push_back({{ActionKind::add, v}, *fitness(w, next) - current});
        }
    }
    return out;
}

/// Greedy local search with the same tie-break policy, recomputing every
/// candidate from scratch. Returns the action sequence.
inline std::vector<Action> hill_climb(const WeightedAdjacency& w, const NodeSet& seed) {
    std::vector<bool> in = indicator(w.node_count(), seed);
    std::vector<Action> trace;
    while (true) {
        std::optional<Move> best;
        for (const Move& m : all_moves(w, in)) {
            if (!(m.gain > 0.0)) continue;
            const bool add_first = m.action.kind == ActionKind::add && best && best->action.kind == ActionKind::remove;
            const bool same_kind_smaller = best && m.action.kind == best->action.kind && m.action.node < best->action.node;
            if (!best || m.gain > best->gain || (m.gain == best->gain && (add_first || same_kind_smaller)))
                best = m;
        }
        if (!best) return trace;
        trace.push_back(best->action);
        in[best->action.node] = best->action.kind == ActionKind::add;
    }
}

/// Random graph on n nodes whose edge weights are drawn from {1/4, 1/2, 3/4, 1},
/// so every fitness sum is exact in binary floating point.
inline WeightedAdjacency dyadic_weights(const AttributedNetwork& net, std::mt19937_64& rng) {
    std::vector<double> weights(net.edge_count());
    for (auto& x : weights) x = 0.25 * static_cast<double>(1 + rng() % 4);
    return WeightedAdjacency::from_edge_weights(net, std::move(weights));
}

inline double jaccard(const NodeSet& a, const NodeSet& b) {
    std::vector<NodeId> both;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(both));
    if (both.empty()) return 0.0;
    std::size_t common = 0;
    for (NodeId v : a) common += static_cast<std::size_t>(std::binary_search(b.begin(), b.end(), v));
    return static_cast<double>(common) / static_cast<double>(both.size());
}

}  // namespace tscm::oracle
