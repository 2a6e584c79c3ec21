#pragma once

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "tscm/network.hpp"

namespace tscm::testing {

using EdgeList = std::vector<std::pair<NodeId, NodeId>>;

/// Nodes "0".."n-1" with numerical attributes taken from `values[v]`.
inline AttributedNetwork numeric_network(const std::vector<std::vector<double>>& values,
                                         const EdgeList& edges) {
    const std::size_t r = values.empty() ? 0 : values.front().size();
    std::vector<AttributeSpec> specs;
    for (std::size_t t = 0; t < r; ++t) specs.push_back({"x" + std::to_string(t), AttributeKind::numerical, {}});
    NetworkBuilder builder(std::move(specs));
    for (std::size_t v = 0; v < values.size(); ++v) {
        std::vector<AttributeValue> row;
        for (double x : values[v]) row.push_back(Numerical{x});
        builder.add_node(std::to_string(v), row);
    }
    for (auto [a, b] : edges) builder.add_edge(a, b);
    return std::move(builder).build();
}

/// Same attribute vector on every node.
inline AttributedNetwork uniform_network(std::size_t n, std::size_t r, const EdgeList& edges) {
    return numeric_network(std::vector<std::vector<double>>(n, std::vector<double>(r, 0.5)), edges);
}

inline EdgeList clique(NodeId first, NodeId size) {
    EdgeList out;
    for (NodeId a = first; a < first + size; ++a)
        for (NodeId b = a + 1; b < first + size; ++b) out.emplace_back(a, b);
    return out;
}

inline EdgeList concat(EdgeList a, const EdgeList& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

/// G(n, p) with attributes of mixed kinds, deterministic in seed.
inline AttributedNetwork random_network(std::size_t n, double p, std::size_t r, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<AttributeSpec> specs;
    for (std::size_t t = 0; t < r; ++t) {
        const auto kind = static_cast<AttributeKind>(t % 3);
        AttributeSpec spec{"a" + std::to_string(t), kind, {}};
        if (kind == AttributeKind::categorical) spec.categories = {"x", "y", "z"};
        specs.push_back(std::move(spec));
    }
    NetworkBuilder builder(specs);
    for (std::size_t v = 0; v < n; ++v) {
        std::vector<AttributeValue> row;
        for (std::size_t t = 0; t < r; ++t) {
            switch (specs[t].kind) {
                case AttributeKind::numerical: row.emplace_back(Numerical{unit(rng) * 10.0}); break;
                case AttributeKind::binary: row.emplace_back(Binary{unit(rng) < 0.5}); break;
                case AttributeKind::categorical: row.emplace_back(Categorical{static_cast<std::uint32_t>(rng() % 3)}); break;
            }
        }
        builder.add_node("n" + std::to_string(v), row);
    }
    for (NodeId a = 0; a < n; ++a)
        for (NodeId b = a + 1; b < n; ++b)
            if (unit(rng) < p) builder.add_edge(a, b);
    return std::move(builder).build();
}

/// Hand-built version of the 14-node friendship example: a music community
/// {1..4}, a work/location community {5..10} and a sport community {11..14}.
/// Node 0 is unused padding so that indices match the node labels.
inline AttributedNetwork toy_friendship_network() {
    std::vector<AttributeSpec> specs = {{"sport", AttributeKind::categorical, {}},
                                        {"music", AttributeKind::categorical, {}},
                                        {"work", AttributeKind::categorical, {}},
                                        {"location", AttributeKind::categorical, {}}};
    NetworkBuilder builder(std::move(specs));
    for (NodeId v = 0; v <= 14; ++v) {
        const std::string own = std::to_string(v);
        const bool left = v >= 1 && v <= 4;
        const bool middle = v >= 5 && v <= 10;
        const bool right = v >= 11;
        std::vector<AttributeValue> row = {
            Categorical{builder.intern_category(0, right ? "football" : "s" + own)},
            Categorical{builder.intern_category(1, left ? "jazz" : "m" + own)},
            Categorical{builder.intern_category(2, middle ? "engineer" : "w" + own)},
            Categorical{builder.intern_category(3, middle ? "downtown" : "l" + own)},
        };
        builder.add_node(own, row);
    }
    const EdgeList edges = {
        {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4},                   // left
        {3, 5}, {4, 5},                                                   // left - middle
        {5, 6}, {5, 7}, {5, 8}, {6, 7}, {6, 8}, {7, 8}, {7, 9}, {8, 9},   // middle
        {7, 10}, {8, 10}, {9, 10},                                        //
        {10, 11}, {10, 12},                                               // middle - right
        {11, 12}, {11, 13}, {11, 14}, {12, 13}, {12, 14}, {13, 14},       // right
        {0, 1},                                                           // padding
    };
    for (auto [a, b] : edges) builder.add_edge(a, b);
    return std::move(builder).build();
}

}  // namespace tscm::testing
