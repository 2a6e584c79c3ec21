#include "tscm/eval.hpp"

#include <chrono>
#include <cmath>
#include <string>

#include "tscm/log.hpp"
#include "tscm/parallel.hpp"

namespace tscm {
namespace {

struct MeanSd {
    double mean = 0.0;
    double sd = 0.0;
};

MeanSd mean_sd(const std::vector<double>& xs) {
    MeanSd out;
    if (xs.empty()) return out;
    for (double x : xs) out.mean += x;
    out.mean /= static_cast<double>(xs.size());
    if (xs.size() < 2) return out;
    double ss = 0.0;
    for (double x : xs) ss += (x - out.mean) * (x - out.mean);
    out.sd = std::sqrt(ss / static_cast<double>(xs.size() - 1));
    return out;
}

}  // namespace

double f1(const NodeSet& truth, const NodeSet& detected) {
    if (truth.empty()) throw InputError("F1 needs a non-empty truth set");
    if (detected.empty()) return 0.0;
    const auto common = static_cast<double>(intersection_size(truth, detected));
    if (common == 0.0) return 0.0;
    const double precision = common / static_cast<double>(detected.size());
    const double recall = common / static_cast<double>(truth.size());
    return 2.0 * precision * recall / (precision + recall);
}

QualityQ quality_q(const std::vector<NodeSet>& truth, const std::vector<NodeSet>& detected) {
    if (truth.empty()) throw InputError("quality needs at least one truth community");
    QualityQ out;
    out.per_target.reserve(truth.size());
    for (const auto& p : truth) {
        double best = 0.0;
        for (const auto& r : detected) best = std::max(best, f1(p, r));
        out.per_target.push_back(best);
    }
    for (double x : out.per_target) out.q += x;
    out.q /= static_cast<double>(truth.size());
    return out;
}

double quality_ss(const Subspace& mined, const Subspace& planted) {
    return subspace_cosine(mined, planted);
}

nlohmann::json to_json(const EvalReport& report) {
    return {{"ss", report.ss},
            {"q", report.quality.q},
            {"qi", report.quality.per_target},
            {"meta", report.meta}};
}

GroundTruth ground_truth(const BenchmarkInstance& instance) {
    return {instance.target_communities(), instance.target_subspace};
}

TrialSummary run_trials(const AttributedNetwork& net, const GroundTruth& truth,
                        const TrialOptions& options) {
    if (truth.targets.empty()) throw InputError("no target communities to sample from");
    for (const auto& p : truth.targets)
        if (p.size() < 2) throw InputError("target communities need at least two members");

    TrialSummary summary;
    Rng rng(options.seed);
    std::vector<double> ss;
    std::vector<double> q;
    for (std::size_t trial = 0; trial < options.trials; ++trial) {
        TrialResult result;
        result.target = std::uniform_int_distribution<std::size_t>(0, truth.targets.size() - 1)(rng);
        const NodeSet& members = truth.targets[result.target];
        std::uniform_int_distribution<std::size_t> pick(0, members.size() - 1);
        const std::size_t i = pick(rng);
        std::size_t j = std::uniform_int_distribution<std::size_t>(0, members.size() - 2)(rng);
        if (j >= i) ++j;
        result.s1 = members[i];
        result.s2 = members[j];

        MiningOptions mining = options.mining;
        mining.seed = derive_seed(options.seed, trial);
        const auto start = std::chrono::steady_clock::now();
        try {
            const MiningResult mined = tscm(net, result.s1, result.s2, mining);
            std::vector<NodeSet> detected;
            for (const auto& c : mined.communities) detected.push_back(c.members);
            result.ss = quality_ss(mined.subspace, truth.subspace);
            result.q = quality_q(truth.targets, detected).q;
        } catch (const AlgorithmError& e) {
            log::warn("trial " + std::to_string(trial) + " failed: " + e.what());
            result.failed = true;
        }
        result.elapsed_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        summary.max_ms = std::max(summary.max_ms, result.elapsed_ms);
        ss.push_back(result.ss);
        q.push_back(result.q);
        summary.trials.push_back(result);
    }
    const auto s = mean_sd(ss);
    const auto t = mean_sd(q);
    summary.mean_ss = s.mean;
    summary.sd_ss = s.sd;
    summary.mean_q = t.mean;
    summary.sd_q = t.sd;
    return summary;
}

nlohmann::json to_json(const TrialSummary& summary, bool with_timing) {
    nlohmann::json trials = nlohmann::json::array();
    for (const auto& t : summary.trials) {
        nlohmann::json row = {{"target", t.target}, {"samples", {t.s1, t.s2}},
                              {"ss", t.ss},         {"q", t.q},
                              {"failed", t.failed}};
        if (with_timing) row["elapsed_ms"] = t.elapsed_ms;
        trials.push_back(std::move(row));
    }
    nlohmann::json out = {{"mean_ss", summary.mean_ss}, {"sd_ss", summary.sd_ss},
                          {"mean_q", summary.mean_q},   {"sd_q", summary.sd_q},
                          {"trials", std::move(trials)}};
    if (with_timing) out["max_ms"] = summary.max_ms;
    return out;
}

}  // namespace tscm
