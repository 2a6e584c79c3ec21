#pragma once

#include <cstdint>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "tscm/seeding.hpp"

namespace tscm {

/// Node set on a weighted adjacency with incrementally maintained sums:
///   internal = sum_{v,u in C} A_vu (each internal edge counted twice)
///   volume   = sum_{u in C} weighted degree of u
///   fitness  = internal / volume
class Community {
  public:
    /// Throws InputError on an empty or out-of-range seed.
    Community(const WeightedAdjacency& weights, const NodeSet& seed);

    NodeSet members() const;
    bool contains(NodeId v) const { return members_.contains(v); }
    std::size_t size() const { return members_.size(); }

    double internal_weight() const { return internal_; }
    double volume() const { return volume_; }
    /// Throws AlgorithmError when every member is isolated (volume 0).
    double fitness() const;
    ScoredCommunity scored() const { return {members(), fitness()}; }

    /// Total edge weight between v and the members (v itself excluded).
    double links(NodeId v) const;
    /// Non-member with at least one edge into the community.
    bool is_frontier(NodeId v) const;
    /// Removing v keeps the community non-empty with positive volume.
    bool can_remove(NodeId v) const;

    double delta_add(NodeId v) const;
    double delta_remove(NodeId v) const;

    void add(NodeId v);
    void remove(NodeId v);

    template <class F>
    void for_each_member(F&& f) const {
        for (NodeId v : members_) f(v);
    }
    template <class F>
    void for_each_frontier(F&& f) const {
        for (const auto& [v, link] : links_)
            if (!members_.contains(v)) f(v);
    }

  private:
    struct Link {
        double weight = 0.0;
        std::uint32_t edges = 0;
    };

    void update_links(NodeId v, bool adding);

    const WeightedAdjacency* weights_;
    std::unordered_set<NodeId> members_;
    std::unordered_map<NodeId, Link> links_;  // every node with an edge into C
    double internal_ = 0.0;
    double volume_ = 0.0;
    std::size_t structural_volume_ = 0;  // plain degree sum, decides volume > 0 exactly
};

/// Fitness of C computed from scratch. Throws InputError on an empty set and
/// AlgorithmError when the volume is zero.
double subspace_fitness(const WeightedAdjacency& weights, const NodeSet& community);

enum class ActionKind { add, remove };

struct Action {
    ActionKind kind;
    NodeId node;

    friend bool operator==(const Action&, const Action&) = default;
};

/// fitness(C after action) - fitness(C), from the cached sums. Throws
/// InputError unless the action is admissible (add: frontier node; remove:
/// member whose removal leaves a non-empty community with positive volume).
double delta_fitness(const Community& community, const Action& action);

/// Preference among equal fitness gains: add before remove, then smaller node.
bool breaks_tie_before(const Action& a, const Action& b);

struct AdjustTrace {
    std::vector<Action> actions;
    std::vector<double> fitness;  // fitness[0] = seed, fitness[i+1] after actions[i]
};

/// Hill climbing: repeatedly applies the admissible add/remove with the
/// largest positive fitness gain until none is positive. Throws
/// AlgorithmError if 10*n actions are exceeded.
Community adjust_community(const WeightedAdjacency& weights, const NodeSet& seed,
                           AdjustTrace* trace = nullptr);

}  // namespace tscm
