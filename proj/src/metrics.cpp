#include "tscm/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace tscm {

Subspace Subspace::normalize(std::vector<double> weights) {
    double sum = 0.0;
    for (double w : weights) {
        if (!std::isfinite(w) || w < 0.0) throw InputError("subspace weights must be finite and >= 0");
        sum += w;
    }
    if (!(sum > 0.0)) throw InputError("subspace weights are all zero");
    for (double& w : weights) w /= sum;
    return Subspace(std::move(weights));
}

Subspace Subspace::from_weights(std::vector<double> weights) {
    double sum = 0.0;
    for (double w : weights) {
        if (!std::isfinite(w) || w < 0.0) throw InputError("subspace weights must be finite and >= 0");
        sum += w;
    }
    if (std::abs(sum - 1.0) > kSumTolerance)
        throw InputError("subspace weights must sum to 1 (got " + format_double(sum) + ")");
    return Subspace(std::move(weights));
}

Subspace Subspace::uniform(std::size_t r) {
    if (r == 0) throw InputError("subspace needs at least one attribute");
    return Subspace(std::vector<double>(r, 1.0 / static_cast<double>(r)));
}

double weighted_distance(const AttributedNetwork& net, const Subspace& l, NodeId v, NodeId u) {
    if (l.size() != net.attribute_count())
        throw InputError("subspace has " + std::to_string(l.size()) + " weights, network has " +
                         std::to_string(net.attribute_count()) + " attributes");
    const double sq = kernels::active().weighted_sq_distance(
        net.codes(v).data(), net.codes(u).data(), l.weights().data(), net.layout());
    return std::sqrt(sq);
}

double subspace_similarity_nodes(const AttributedNetwork& net, const Subspace& l, NodeId v,
                                 NodeId u) {
    return std::exp(-weighted_distance(net, l, v, u));
}

double subspace_cosine(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size()) throw InputError("subspace length mismatch");
    double dot = 0.0;
    double na = 0.0;
    double nb = 0.0;
    for (std::size_t t = 0; t < a.size(); ++t) {
        dot += a[t] * b[t];
        na += a[t] * a[t];
        nb += b[t] * b[t];
    }
    if (na == 0.0 || nb == 0.0) throw InputError("invalid subspace: zero vector");
    return std::clamp(dot / (std::sqrt(na) * std::sqrt(nb)), 0.0, 1.0);
}

}  // namespace tscm
