#include "tscm/expansion.hpp"

#include <algorithm>
#include <optional>

namespace tscm {

Community::Community(const WeightedAdjacency& weights, const NodeSet& seed) : weights_(&weights) {
    if (seed.empty()) throw InputError("community seed is empty");
    for (NodeId v : seed) {
        if (v >= weights.node_count()) throw InputError("community seed node out of range");
        if (!contains(v)) add(v);
    }
}

NodeSet Community::members() const {
    NodeSet out(members_.begin(), members_.end());
    std::sort(out.begin(), out.end());
    return out;
}

double Community::fitness() const {
    if (structural_volume_ == 0) throw AlgorithmError("fitness undefined: community has no incident edges");
    return internal_ / volume_;
}

double Community::links(NodeId v) const {
    const auto it = links_.find(v);
    return it == links_.end() ? 0.0 : it->second.weight;
}

bool Community::is_frontier(NodeId v) const { return !contains(v) && links_.contains(v); }

bool Community::can_remove(NodeId v) const {
    return contains(v) && members_.size() > 1 &&
           structural_volume_ > weights_->network().degree(v);
}

double Community::delta_add(NodeId v) const {
    const double k = links(v);
    const double d = weights_->weighted_degree(v);
    return (internal_ + 2.0 * k) / (volume_ + d) - internal_ / volume_;
}

double Community::delta_remove(NodeId v) const {
    const double k = links(v);
    const double d = weights_->weighted_degree(v);
    return (internal_ - 2.0 * k) / (volume_ - d) - internal_ / volume_;
}

void Community::update_links(NodeId v, bool adding) {
    const auto nbrs = weights_->network().neighbors(v);
    const auto w = weights_->neighbor_weights(v);
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
        if (adding) {
            Link& link = links_[nbrs[i]];
            link.weight += w[i];
            ++link.edges;
        } else {
            const auto it = links_.find(nbrs[i]);
            if (--it->second.edges == 0) links_.erase(it);
            else it->second.weight -= w[i];
        }
    }
}

void Community::add(NodeId v) {
    if (contains(v)) throw InputError("node already in community");
    internal_ += 2.0 * links(v);
    volume_ += weights_->weighted_degree(v);
    structural_volume_ += weights_->network().degree(v);
    members_.insert(v);
    update_links(v, true);
}

void Community::remove(NodeId v) {
    if (!contains(v)) throw InputError("node not in community");
    if (members_.size() == 1) throw InputError("removal would empty the community");
    internal_ -= 2.0 * links(v);
    volume_ -= weights_->weighted_degree(v);
    structural_volume_ -= weights_->network().degree(v);
    members_.erase(v);
    update_links(v, false);
}

double subspace_fitness(const WeightedAdjacency& weights, const NodeSet& community) {
    if (community.empty()) throw InputError("fitness of an empty community");
    const AttributedNetwork& net = weights.network();
    double internal = 0.0;
    double volume = 0.0;
    for (NodeId v : community) {
        if (v >= net.node_count()) throw InputError("community node out of range");
        const auto nbrs = net.neighbors(v);
        const auto w = weights.neighbor_weights(v);
        for (std::size_t i = 0; i < nbrs.size(); ++i) {
            volume += w[i];
            if (contains(community, nbrs[i])) internal += w[i];
        }
    }
    if (volume == 0.0) throw AlgorithmError("fitness undefined: community has no incident edges");
    return internal / volume;
}

double delta_fitness(const Community& community, const Action& action) {
    if (action.kind == ActionKind::add) {
        if (!community.is_frontier(action.node))
            throw InputError("add target must be a non-member adjacent to the community");
        return community.delta_add(action.node);
    }
    if (!community.can_remove(action.node))
        throw InputError("remove target must be a member whose removal keeps the community valid");
    return community.delta_remove(action.node);
}

bool breaks_tie_before(const Action& a, const Action& b) {
    if (a.kind != b.kind) return a.kind == ActionKind::add;
    return a.node < b.node;
}

Community adjust_community(const WeightedAdjacency& weights, const NodeSet& seed,
                           AdjustTrace* trace) {
    Community community(weights, seed);
    double fitness = community.fitness();
    if (trace) {
        trace->actions.clear();
        trace->fitness.assign(1, fitness);
    }

    const std::size_t cap = 10 * weights.node_count();
    std::size_t steps = 0;
    while (true) {
        std::optional<Action> best;
        double best_gain = 0.0;
        auto consider = [&](Action action, double gain) {
            if (!(gain > 0.0)) return;
            if (!best || gain > best_gain || (gain == best_gain && breaks_tie_before(action, *best))) {
                best = action;
                best_gain = gain;
            }
        };
        community.for_each_member([&](NodeId v) {
            if (community.can_remove(v)) consider({ActionKind::remove, v}, community.delta_remove(v));
        });
        community.for_each_frontier(
            [&](NodeId v) { consider({ActionKind::add, v}, community.delta_add(v)); });
        if (!best) break;

        if (++steps > cap)
            throw AlgorithmError("community adjustment exceeded " + std::to_string(cap) + " actions");
        if (best->kind == ActionKind::add) community.add(best->node);
        else community.remove(best->node);
        fitness = community.fitness();
        if (trace) {
            trace->actions.push_back(*best);
            trace->fitness.push_back(fitness);
        }
    }
    return community;
}

}  // namespace tscm
