#include "tscm/targeting.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <tuple>

#include "tscm/expansion.hpp"
#include "tscm/log.hpp"
#include "tscm/lpa.hpp"
#include "tscm/parallel.hpp"
#include "tscm/seeding.hpp"

namespace tscm {
namespace {

constexpr std::uint64_t kFinalStream = 0xffffffffULL;
constexpr std::uint64_t kPrototypeStream = 0xfffffffeULL;

void require_node(const AttributedNetwork& net, NodeId v) {
    if (v >= net.node_count()) throw InputError("node index " + std::to_string(v) + " out of range");
}

std::vector<CandidateSubspace> usable_candidates(const AttributedNetwork& net, NodeId v,
                                                 std::uint64_t seed, unsigned threads) {
    auto candidates = candidate_subspaces(net, v, seed, threads);
    if (candidates.empty())
        throw AlgorithmError("sample node '" + net.id(v) + "' has no usable candidate subspace");
    return candidates;
}

// With fewer than two nodes outside T there is no random pair to contrast
// against, so every attribute is equally (un)informative.
Subspace exemplar_subspace(const AttributedNetwork& net, const NodeSet& exemplars, std::uint64_t seed) {
    if (net.node_count() < exemplars.size() + 2) {
        log::info("exemplar set leaves fewer than two other nodes; using the uniform subspace");
        return Subspace::uniform(net.attribute_count());
    }
    return compute_subspace(net, exemplars, seed);
}

}  // namespace

std::vector<CandidateSubspace> candidate_subspaces(const AttributedNetwork& net, NodeId v,
                                                   std::uint64_t seed, unsigned threads) {
    require_node(net, v);
    if (net.degree(v) == 0) throw AlgorithmError("sample node '" + net.id(v) + "' has no neighbors");

    const auto communities = detect_nei_community(net, v, derive_seed(seed, v, 0));
    std::vector<std::optional<CandidateSubspace>> slots(communities.size());
    parallel_for(communities.size(), threads, [&](std::size_t i) {
        NodeSet exemplars = communities[i];
        exemplars.insert(std::upper_bound(exemplars.begin(), exemplars.end(), v), v);
        try {
            Subspace l = exemplar_subspace(net, exemplars, derive_seed(seed, v, i + 1));
            slots[i] = CandidateSubspace{std::move(l), std::move(exemplars), v};
        } catch (const AlgorithmError& e) {
            log::debug("skipping candidate of '" + net.id(v) + "': " + e.what());
        }
    });

    std::vector<CandidateSubspace> out;
    for (auto& slot : slots)
        if (slot) out.push_back(std::move(*slot));
    return out;
}

TargetSubspace mine_target_subspace(const AttributedNetwork& net, NodeId s1, NodeId s2,
                                    std::uint64_t seed, unsigned threads) {
    require_node(net, s1);
    require_node(net, s2);
    if (s1 == s2) throw InputError("sample nodes must be distinct");

    auto first = usable_candidates(net, s1, seed, threads);
    auto second = usable_candidates(net, s2, seed, threads);

    std::size_t best_i = 0;
    std::size_t best_j = 0;
    double best = -1.0;
    for (std::size_t i = 0; i < first.size(); ++i) {
        for (std::size_t j = 0; j < second.size(); ++j) {
            const double ss = subspace_cosine(first[i].subspace, second[j].subspace);
            const bool better =
                ss > best ||
                (ss == best && std::tie(first[i].exemplars, second[j].exemplars) <
                                   std::tie(first[best_i].exemplars, second[best_j].exemplars));
            if (better) {
                best = ss;
                best_i = i;
                best_j = j;
            }
        }
    }

    TargetSubspace out{Subspace::uniform(net.attribute_count()), {}, {}, best};
    out.exemplars = set_union(first[best_i].exemplars, second[best_j].exemplars);
    out.subspace = exemplar_subspace(net, out.exemplars, derive_seed(seed, kFinalStream));
    out.selected.push_back(std::move(first[best_i]));
    out.selected.push_back(std::move(second[best_j]));
    return out;
}

TargetSubspace mine_target_subspace_multi(const AttributedNetwork& net,
                                          std::span<const NodeId> samples, std::uint64_t seed,
                                          unsigned threads) {
    if (samples.size() < 3) throw InputError("multi-sample mining needs at least three samples");
    std::set<NodeId> distinct;
    for (NodeId v : samples) {
        require_node(net, v);
        if (!distinct.insert(v).second) throw InputError("duplicate sample node '" + net.id(v) + "'");
    }

    std::vector<std::vector<CandidateSubspace>> candidates;
    candidates.reserve(samples.size());
    for (NodeId v : samples) candidates.push_back(usable_candidates(net, v, seed, threads));

    Rng rng(derive_seed(seed, kPrototypeStream));
    std::uniform_int_distribution<std::size_t> pick_first(0, samples.size() - 1);
    const std::size_t p1 = pick_first(rng);
    std::uniform_int_distribution<std::size_t> pick_second(0, samples.size() - 2);
    std::size_t p2 = pick_second(rng);
    if (p2 >= p1) ++p2;

    std::size_t best_i = 0;
    std::size_t best_j = 0;
    double best = -1.0;
    for (std::size_t i = 0; i < candidates[p1].size(); ++i) {
        for (std::size_t j = 0; j < candidates[p2].size(); ++j) {
            const auto& a = candidates[p1][i];
            const auto& b = candidates[p2][j];
            const double ss = subspace_cosine(a.subspace, b.subspace);
            const bool better = ss > best || (ss == best && std::tie(a.exemplars, b.exemplars) <
                                                               std::tie(candidates[p1][best_i].exemplars,
                                                                        candidates[p2][best_j].exemplars));
            if (better) {
                best = ss;
                best_i = i;
                best_j = j;
            }
        }
    }

    TargetSubspace out{Subspace::uniform(net.attribute_count()), {}, {}, best};
    out.selected.push_back(candidates[p1][best_i]);
    out.selected.push_back(candidates[p2][best_j]);
    // Copies: out.selected grows below.
    const Subspace proto1 = out.selected[0].subspace;
    const Subspace proto2 = out.selected[1].subspace;

    for (std::size_t s = 0; s < samples.size(); ++s) {
        if (s == p1 || s == p2) continue;
        std::size_t chosen = 0;
        double chosen_score = -1.0;
        for (std::size_t i = 0; i < candidates[s].size(); ++i) {
            const double score = subspace_cosine(candidates[s][i].subspace, proto1) +
                                 subspace_cosine(candidates[s][i].subspace, proto2);
            if (score > chosen_score ||
                (score == chosen_score && candidates[s][i].exemplars < candidates[s][chosen].exemplars)) {
                chosen_score = score;
                chosen = i;
            }
        }
        out.selected.push_back(candidates[s][chosen]);
    }

    for (const auto& c : out.selected) out.exemplars = set_union(out.exemplars, c.exemplars);
    out.subspace = exemplar_subspace(net, out.exemplars, derive_seed(seed, kFinalStream));
    return out;
}

std::vector<EgoCommunity> ego_analysis(const AttributedNetwork& net, NodeId v, std::uint64_t seed,
                                       unsigned threads) {
    require_node(net, v);
    if (net.degree(v) == 0) throw AlgorithmError("node '" + net.id(v) + "' has no neighbors");
    auto candidates = candidate_subspaces(net, v, seed, threads);
    if (candidates.empty())
        throw AlgorithmError("node '" + net.id(v) + "' has no usable candidate subspace");

    std::vector<std::optional<EgoCommunity>> slots(candidates.size());
    parallel_for(candidates.size(), threads, [&](std::size_t i) {
        const WeightedAdjacency weights = reweight(net, candidates[i].subspace);
        try {
            const Community community = adjust_community(weights, candidates[i].exemplars);
            slots[i] = EgoCommunity{candidates[i].subspace, candidates[i].exemplars, community.scored()};
        } catch (const AlgorithmError& e) {
            log::warn("ego candidate " + std::to_string(i) + " skipped: " + e.what());
        }
    });
    std::vector<EgoCommunity> out;
    for (auto& slot : slots)
        if (slot) out.push_back(std::move(*slot));
    return out;
}

}  // namespace tscm
