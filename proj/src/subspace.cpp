#include "tscm/subspace.hpp"

#include <algorithm>
#include <unordered_set>

namespace tscm {

PairSet exemplar_pairs(const NodeSet& exemplars) {
    PairSet out{PairRole::similar, {}};
    out.pairs.reserve(exemplars.size() * (exemplars.size() - 1) / 2);
    for (std::size_t i = 0; i < exemplars.size(); ++i)
        for (std::size_t j = i + 1; j < exemplars.size(); ++j)
            out.pairs.push_back({exemplars[i], exemplars[j]});
    return out;
}

PairSet sample_random_pairs(const AttributedNetwork& net, const NodeSet& exemplars,
                            std::size_t count, Rng& rng) {
    PairSet out{PairRole::random, {}};
    const std::size_t n = net.node_count();
    if (!exemplars.empty() && exemplars.back() >= n) throw InputError("exemplar node out of range");
    const std::size_t outside = n - exemplars.size();
    const std::size_t available = outside < 2 ? 0 : outside * (outside - 1) / 2;
    count = std::min(count, available);
    if (count == 0) return out;

    if (2 * count > available) {
        // Dense regime: enumerate the complement pairs and take a random subset.
        std::vector<NodeId> rest;
        rest.reserve(outside);
        for (NodeId v = 0; v < n; ++v)
            if (!contains(exemplars, v)) rest.push_back(v);
        std::vector<Edge> all;
        all.reserve(available);
        for (std::size_t i = 0; i < rest.size(); ++i)
            for (std::size_t j = i + 1; j < rest.size(); ++j) all.push_back({rest[i], rest[j]});
        for (std::size_t i = 0; i < count; ++i) {
            std::uniform_int_distribution<std::size_t> pick(i, all.size() - 1);
            std::swap(all[i], all[pick(rng)]);
        }
        all.resize(count);
        out.pairs = std::move(all);
        return out;
    }

    std::uniform_int_distribution<NodeId> node(0, static_cast<NodeId>(n - 1));
    std::unordered_set<std::uint64_t> seen;
    seen.reserve(count * 2);
    out.pairs.reserve(count);
    while (out.pairs.size() < count) {
        NodeId a = node(rng);
        NodeId b = node(rng);
        if (a == b || contains(exemplars, a) || contains(exemplars, b)) continue;
        if (a > b) std::swap(a, b);
        if (seen.insert((std::uint64_t{a} << 32) | b).second) out.pairs.push_back({a, b});
    }
    return out;
}

std::vector<double> mean_sq_diff(const AttributedNetwork& net, const PairSet& pairs) {
    const std::size_t r = net.attribute_count();
    std::vector<double> h(r, 0.0);
    if (pairs.pairs.empty()) return h;
    const auto& kernel = kernels::active();
    for (const Edge& p : pairs.pairs)
        kernel.accumulate_sq_diff(net.codes(p.first).data(), net.codes(p.second).data(),
                                  net.layout(), h.data());
    const double scale = 1.0 / static_cast<double>(pairs.pairs.size());
    for (double& x : h) x *= scale;
    return h;
}

Subspace subspace_from_pair_stats(const std::vector<double>& h_similar,
                                  const std::vector<double>& h_random, std::size_t similar_pairs,
                                  std::vector<double>* raw_weights) {
    if (h_similar.size() != h_random.size() || h_similar.empty())
        throw InputError("pair statistics length mismatch");
    if (similar_pairs == 0) throw InputError("no similar pairs");
    const double smoothing = 1.0 / static_cast<double>(similar_pairs);
    std::vector<double> weights(h_similar.size(), 0.0);
    bool any = false;
    for (std::size_t t = 0; t < weights.size(); ++t) {
        if (h_similar[t] < h_random[t]) {
            weights[t] = h_random[t] / (h_similar[t] + smoothing);
            any = any || weights[t] > 0.0;
        }
    }
    if (raw_weights) *raw_weights = weights;
    if (!any) return Subspace::uniform(weights.size());
    return Subspace::normalize(std::move(weights));
}

Subspace compute_subspace(const AttributedNetwork& net, const NodeSet& exemplars,
                          std::uint64_t seed, SubspaceDiagnostics* diagnostics) {
    if (exemplars.size() < 2) throw InputError("compute_subspace needs at least two exemplar nodes");
    if (!std::is_sorted(exemplars.begin(), exemplars.end()) ||
        std::adjacent_find(exemplars.begin(), exemplars.end()) != exemplars.end())
        throw InputError("exemplar set must be sorted and duplicate-free");
    if (exemplars.back() >= net.node_count()) throw InputError("exemplar node out of range");
    if (net.node_count() - exemplars.size() < 2)
        throw AlgorithmError("network too small to sample random pairs outside the exemplar set");

    Rng rng(seed);
    PairSet similar = exemplar_pairs(exemplars);
    PairSet random =
        sample_random_pairs(net, exemplars, net.attribute_count() * similar.pairs.size(), rng);

    std::vector<double> h_similar = mean_sq_diff(net, similar);
    std::vector<double> h_random = mean_sq_diff(net, random);
    std::vector<double> raw;
    Subspace l = subspace_from_pair_stats(h_similar, h_random, similar.pairs.size(), &raw);

    if (diagnostics) {
        diagnostics->uniform_fallback =
            std::all_of(raw.begin(), raw.end(), [](double w) { return w == 0.0; });
        diagnostics->similar = std::move(similar);
        diagnostics->random = std::move(random);
        diagnostics->h_similar = std::move(h_similar);
        diagnostics->h_random = std::move(h_random);
        diagnostics->raw_weights = std::move(raw);
    }
    return l;
}

}  // namespace tscm
