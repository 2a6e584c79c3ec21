#include "tscm/lpa.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "tscm/parallel.hpp"

namespace tscm {

Partition::Partition(std::vector<NodeId> nodes, std::vector<NodeId> labels, std::size_t iterations)
    : nodes_(std::move(nodes)), labels_(std::move(labels)), iterations_(iterations) {
    if (nodes_.size() != labels_.size()) throw InputError("partition: nodes/labels size mismatch");
}

NodeId Partition::label_of(NodeId v) const {
    const auto it = std::lower_bound(nodes_.begin(), nodes_.end(), v);
    if (it == nodes_.end() || *it != v) throw InputError("partition: node not in subgraph");
    return labels_[static_cast<std::size_t>(it - nodes_.begin())];
}

std::vector<NodeSet> Partition::communities() const {
    std::map<NodeId, NodeSet> groups;
    for (std::size_t i = 0; i < nodes_.size(); ++i) groups[labels_[i]].push_back(nodes_[i]);
    std::vector<NodeSet> out;
    out.reserve(groups.size());
    for (auto& [label, members] : groups) out.push_back(std::move(members));  // nodes_ sorted
    std::sort(out.begin(), out.end(),
              [](const NodeSet& a, const NodeSet& b) { return a.front() < b.front(); });
    return out;
}

namespace {

struct LocalGraph {
    std::vector<NodeId> nodes;
    std::vector<std::size_t> offsets;
    std::vector<std::size_t> adjacency;

    explicit LocalGraph(const Subgraph& graph) : nodes(make_node_set(graph.nodes)) {
        const std::size_t k = nodes.size();
        auto local = [&](NodeId v) {
            const auto it = std::lower_bound(nodes.begin(), nodes.end(), v);
            if (it == nodes.end() || *it != v) throw InputError("subgraph edge endpoint not in node set");
            return static_cast<std::size_t>(it - nodes.begin());
        };
        std::vector<std::pair<std::size_t, std::size_t>> pairs;
        pairs.reserve(graph.edges.size());
        for (const Edge& e : graph.edges) {
            std::size_t a = local(e.first);
            std::size_t b = local(e.second);
            if (a == b) continue;
            if (a > b) std::swap(a, b);
            pairs.emplace_back(a, b);
        }
        std::sort(pairs.begin(), pairs.end());
        pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());

        offsets.assign(k + 1, 0);
        for (auto [a, b] : pairs) {
            ++offsets[a + 1];
            ++offsets[b + 1];
        }
        std::partial_sum(offsets.begin(), offsets.end(), offsets.begin());
        adjacency.resize(offsets[k]);
        std::vector<std::size_t> cursor(offsets.begin(), offsets.end() - 1);
        for (auto [a, b] : pairs) {
            adjacency[cursor[a]++] = b;
            adjacency[cursor[b]++] = a;
        }
    }

    std::size_t size() const { return nodes.size(); }
};

// Most frequent neighbor label, smallest on ties. Requires degree > 0.
NodeId preferred_label(const LocalGraph& g, const std::vector<NodeId>& labels, std::size_t i,
                       std::vector<NodeId>& scratch) {
    scratch.clear();
    for (std::size_t k = g.offsets[i]; k < g.offsets[i + 1]; ++k) scratch.push_back(labels[g.adjacency[k]]);
    std::sort(scratch.begin(), scratch.end());
    NodeId best = scratch.front();
    std::size_t best_count = 0;
    for (std::size_t k = 0; k < scratch.size();) {
        std::size_t run = k;
        while (run < scratch.size() && scratch[run] == scratch[k]) ++run;
        if (run - k > best_count) {
            best_count = run - k;
            best = scratch[k];
        }
        k = run;
    }
    return best;
}

}  // namespace

Partition label_propagation(const Subgraph& graph, std::uint64_t seed) {
    const LocalGraph g(graph);
    std::vector<NodeId> labels = g.nodes;
    if (g.size() == 0) return Partition({}, {}, 0);

    Rng rng(seed);
    std::vector<std::size_t> order(g.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::vector<NodeId> scratch;

    std::size_t iteration = 0;
    while (iteration < kLpaMaxIterations) {
        ++iteration;
        std::shuffle(order.begin(), order.end(), rng);
        bool changed = false;
        for (std::size_t i : order) {
            if (g.offsets[i] == g.offsets[i + 1]) continue;
            const NodeId label = preferred_label(g, labels, i, scratch);
            if (label != labels[i]) {
                labels[i] = label;
                changed = true;
            }
        }
        if (!changed) break;
    }
    return Partition(g.nodes, std::move(labels), iteration);
}

bool is_stable(const Subgraph& graph, const Partition& partition) {
    const LocalGraph g(graph);
    if (g.nodes.size() != partition.nodes().size() ||
        !std::equal(g.nodes.begin(), g.nodes.end(), partition.nodes().begin()))
        return false;
    const std::vector<NodeId> labels(partition.labels().begin(), partition.labels().end());
    std::vector<NodeId> scratch;
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (g.offsets[i] == g.offsets[i + 1]) continue;
        if (preferred_label(g, labels, i, scratch) != labels[i]) return false;
    }
    return true;
}

Subgraph neighborhood_network(const AttributedNetwork& net, NodeId v) {
    Subgraph sub;
    const auto nbrs = net.neighbors(v);
    sub.nodes.assign(nbrs.begin(), nbrs.end());
    for (NodeId u : nbrs) {
        for (NodeId w : net.neighbors(u)) {
            if (w > u && std::binary_search(nbrs.begin(), nbrs.end(), w)) sub.edges.push_back({u, w});
        }
    }
    return sub;
}

std::vector<NodeSet> detect_nei_community(const AttributedNetwork& net, NodeId v,
                                          std::uint64_t seed) {
    if (net.degree(v) == 0) return {};
    return label_propagation(neighborhood_network(net, v), seed).communities();
}

}  // namespace tscm
