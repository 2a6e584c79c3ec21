#include "tscm/pipeline.hpp"

#include <chrono>
#include <optional>
#include <string>

#include "tscm/expansion.hpp"
#include "tscm/log.hpp"
#include "tscm/parallel.hpp"
#include "tscm/seeding.hpp"
#include "tscm/targeting.hpp"

namespace tscm {
namespace {

// Per-stage sub-seeds.
constexpr std::uint64_t kTargetingOffset = 1;
constexpr std::uint64_t kSeedingOffset = 2;

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

MiningResult communities_for(const AttributedNetwork& net, TargetSubspace target,
                             const MiningOptions& options, Clock::time_point start,
                             double subspace_ms) {
    MiningResult result{std::move(target.subspace), std::move(target.exemplars), {}, {}};
    RunInfo& info = result.info;
    info.seed = options.seed;
    info.subspace_ms = subspace_ms;

    auto stage = Clock::now();
    auto [seeds, weights] =
        construct_seed_set(net, result.subspace, options.seed + kSeedingOffset, options.threads);
    info.seed_count = seeds.seeds.size();
    info.backbone_edges = seeds.backbone.size();
    info.backbone_threshold = seeds.threshold;
    info.seeding_ms = ms_since(stage);

    stage = Clock::now();
    std::vector<std::optional<ScoredCommunity>> expanded(seeds.seeds.size());
    parallel_for(seeds.seeds.size(), options.threads, [&](std::size_t i) {
        try {
            expanded[i] = adjust_community(weights, seeds.seeds[i]).scored();
        } catch (const AlgorithmError& e) {
            log::warn("seed " + std::to_string(i) + " skipped: " + e.what());
        }
    });
    std::vector<ScoredCommunity> candidates;
    for (auto& c : expanded) {
        if (c) candidates.push_back(std::move(*c));
        else ++info.skipped_seeds;
    }
    info.expanded_count = candidates.size();
    if (candidates.empty()) log::warn("no community seeds were expanded; result is empty");
    result.communities = select_diverse(std::move(candidates), options.beta);
    info.expansion_ms = ms_since(stage);
    info.total_ms = ms_since(start);
    return result;
}

void check_beta(double beta) {
    if (!(beta >= 0.0 && beta <= 1.0)) throw InputError("redundancy parameter must lie in [0, 1]");
}

}  // namespace

MiningResult tscm(const AttributedNetwork& net, NodeId s1, NodeId s2, const MiningOptions& options) {
    check_beta(options.beta);
    const auto start = Clock::now();
    TargetSubspace target =
        mine_target_subspace(net, s1, s2, options.seed + kTargetingOffset, options.threads);
    return communities_for(net, std::move(target), options, start, ms_since(start));
}

MiningResult tscm(const AttributedNetwork& net, std::span<const NodeId> samples,
                  const MiningOptions& options) {
    if (samples.size() < 2) throw InputError("at least two sample nodes are required");
    if (samples.size() == 2) return tscm(net, samples[0], samples[1], options);
    check_beta(options.beta);
    const auto start = Clock::now();
    TargetSubspace target =
        mine_target_subspace_multi(net, samples, options.seed + kTargetingOffset, options.threads);
    return communities_for(net, std::move(target), options, start, ms_since(start));
}

}  // namespace tscm
