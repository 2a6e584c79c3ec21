#pragma once

#include <vector>

#include "tscm/common.hpp"

namespace tscm {

inline constexpr double kDefaultRedundancy = 0.5;

double jaccard(const NodeSet& a, const NodeSet& b);

/// `candidate` is redundant w.r.t. `other` when its fitness is not larger and
/// their Jaccard overlap reaches beta.
bool is_redundant(const ScoredCommunity& candidate, const ScoredCommunity& other, double beta);

/// Greedy diverse subset: communities are visited by decreasing fitness
/// (ties: larger first, then smaller minimum node) and kept unless redundant
/// w.r.t. one already kept. Returns the kept communities in visiting order.
std::vector<ScoredCommunity> select_diverse(std::vector<ScoredCommunity> communities, double beta);

}  // namespace tscm
