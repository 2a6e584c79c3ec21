#include "tscm/diversity.hpp"

#include <algorithm>

namespace tscm {

double jaccard(const NodeSet& a, const NodeSet& b) {
    if (a.empty() && b.empty()) return 1.0;
    const std::size_t common = intersection_size(a, b);
    return static_cast<double>(common) / static_cast<double>(a.size() + b.size() - common);
}

bool is_redundant(const ScoredCommunity& candidate, const ScoredCommunity& other, double beta) {
    if (!(beta >= 0.0 && beta <= 1.0)) throw InputError("redundancy parameter must lie in [0, 1]");
    return candidate.fitness <= other.fitness && jaccard(candidate.members, other.members) >= beta;
}

std::vector<ScoredCommunity> select_diverse(std::vector<ScoredCommunity> communities, double beta) {
    if (!(beta >= 0.0 && beta <= 1.0)) throw InputError("redundancy parameter must lie in [0, 1]");
    std::stable_sort(communities.begin(), communities.end(),
                     [](const ScoredCommunity& a, const ScoredCommunity& b) {
                         if (a.fitness != b.fitness) return a.fitness > b.fitness;
                         if (a.members.size() != b.members.size())
                             return a.members.size() > b.members.size();
                         const NodeId ma = a.members.empty() ? 0 : a.members.front();
                         const NodeId mb = b.members.empty() ? 0 : b.members.front();
                         return ma < mb;
                     });
    std::vector<ScoredCommunity> kept;
    for (auto& candidate : communities) {
        const bool redundant = std::any_of(kept.begin(), kept.end(), [&](const ScoredCommunity& k) {
            return is_redundant(candidate, k, beta);
        });
        if (!redundant) kept.push_back(std::move(candidate));
    }
    return kept;
}

}  // namespace tscm
