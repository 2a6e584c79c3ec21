// Command-line front end: mine, ego, genbench, eval, trials.
//
// Exit codes: 0 success, 2 invalid input or flags, 3 the computation failed.

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tscm/benchgen.hpp"
#include "tscm/eval.hpp"
#include "tscm/log.hpp"
#include "tscm/pipeline.hpp"
#include "tscm/targeting.hpp"

namespace {

using nlohmann::json;
using namespace tscm;

constexpr int kExitInput = 2;
constexpr int kExitRuntime = 3;

/// Orders IDs numerically when they are integers, lexicographically otherwise
/// (integers first).
bool id_less(const std::string& a, const std::string& b) {
    const auto key = [](const std::string& s) {
        long long value = 0;
        const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
        const bool integer = ec == std::errc() && ptr == s.data() + s.size();
        return std::make_tuple(integer ? 0 : 1, integer ? value : 0LL, std::cref(s));
    };
    return key(a) < key(b);
}

json sorted_ids(const AttributedNetwork& net, const NodeSet& nodes) {
    std::vector<std::string> ids;
    ids.reserve(nodes.size());
    for (NodeId v : nodes) ids.push_back(net.id(v));
    std::sort(ids.begin(), ids.end(), id_less);
    return ids;
}

json weights(const Subspace& l) { return std::vector<double>(l.weights().begin(), l.weights().end()); }

json attribute_names(const AttributedNetwork& net) {
    json names = json::array();
    for (const auto& spec : net.attributes()) names.push_back(spec.name);
    return names;
}

void emit(const json& doc, const std::string& out) {
    if (out.empty() || out == "-") {
        std::cout << doc.dump(2) << '\n';
        return;
    }
    std::ofstream file(out);
    if (!file) throw InputError("cannot write '" + out + "'");
    file << doc.dump(2) << '\n';
}

std::vector<std::string> split_ids(const std::string& list) {
    std::vector<std::string> ids;
    std::size_t start = 0;
    while (start <= list.size()) {
        const std::size_t comma = std::min(list.find(',', start), list.size());
        std::string id = list.substr(start, comma - start);
        if (id.empty()) throw InputError("empty node ID in sample list '" + list + "'");
        ids.push_back(std::move(id));
        start = comma + 1;
    }
    return ids;
}

struct CommonFlags {
    std::uint64_t seed = 42;
    unsigned threads = 0;
    std::string out;
};

void add_common(CLI::App* cmd, CommonFlags& flags) {
    cmd->add_option("--seed", flags.seed, "Master random seed")->capture_default_str();
    cmd->add_option("--threads", flags.threads, "Worker threads (0 = all cores)")->capture_default_str();
    cmd->add_option("--out", flags.out, "Output path (default: stdout)");
}

// --- mine -------------------------------------------------------------------

struct MineArgs {
    std::string graph;
    std::string attrs;
    std::string samples;
    double beta = kDefaultRedundancy;
    CommonFlags common;
};

int cmd_mine(const MineArgs& args) {
    const auto ids = split_ids(args.samples);
    if (ids.size() < 2) throw InputError("at least two sample nodes are required");
    std::set<std::string> seen;
    for (const auto& id : ids)
        if (!seen.insert(id).second) throw InputError("duplicate sample node '" + id + "'");

    const AttributedNetwork net = load_network(args.graph, args.attrs);
    std::vector<NodeId> samples;
    for (const auto& id : ids) samples.push_back(net.require(id));

    const MiningOptions options{args.beta, args.common.seed, args.common.threads};
    const MiningResult result = tscm::tscm(net, samples, options);

    json communities = json::array();
    for (const auto& c : result.communities)
        communities.push_back({{"members", sorted_ids(net, c.members)}, {"fitness", c.fitness}});
    const RunInfo& info = result.info;
    json doc = {
        {"subspace", weights(result.subspace)},
        {"exemplars", sorted_ids(net, result.exemplars)},
        {"communities", std::move(communities)},
        {"meta",
         {{"seed", info.seed},
          {"beta", args.beta},
          {"samples", ids},
          {"attributes", attribute_names(net)},
          {"seed_count", info.seed_count},
          {"expanded_count", info.expanded_count},
          {"skipped_seeds", info.skipped_seeds},
          {"backbone_edges", info.backbone_edges},
          {"backbone_threshold", info.backbone_threshold},
          {"elapsed_ms", info.total_ms},
          {"timing_ms",
           {{"subspace", info.subspace_ms}, {"seeding", info.seeding_ms}, {"expansion", info.expansion_ms}}}}}};
    emit(doc, args.common.out);
    return 0;
}

// --- ego --------------------------------------------------------------------

struct EgoArgs {
    std::string graph;
    std::string attrs;
    std::string node;
    CommonFlags common;
};

int cmd_ego(const EgoArgs& args) {
    const AttributedNetwork net = load_network(args.graph, args.attrs);
    const NodeId v = net.require(args.node);
    const auto pairs = ego_analysis(net, v, args.common.seed, args.common.threads);
    json list = json::array();
    for (const auto& p : pairs)
        list.push_back({{"subspace", weights(p.subspace)},
                        {"exemplars", sorted_ids(net, p.exemplars)},
                        {"community", {{"members", sorted_ids(net, p.community.members)},
                                       {"fitness", p.community.fitness}}}});
    emit({{"node", args.node},
          {"pairs", std::move(list)},
          {"meta", {{"seed", args.common.seed}, {"attributes", attribute_names(net)}}}},
         args.common.out);
    return 0;
}

// --- genbench ---------------------------------------------------------------

struct GenbenchArgs {
    BenchmarkConfig config;
    std::string kind = "num";
    std::string prefix = "bench";
};

AttributeKind parse_kind(const std::string& text) {
    if (auto kind = parse_kind_token(text)) return *kind;
    if (text == "numerical") return AttributeKind::numerical;
    if (text == "binary") return AttributeKind::binary;
    if (text == "categorical") return AttributeKind::categorical;
    throw InputError("unknown attribute kind '" + text + "'");
}

int cmd_genbench(GenbenchArgs args) {
    args.config.kind = parse_kind(args.kind);
    const BenchmarkInstance instance = generate(args.config);
    write_benchmark(instance, args.prefix);
    const auto& s = instance.stats;
    json sizes = json::array();
    for (const auto& c : instance.communities) sizes.push_back(c.size());
    std::cout << json{{"prefix", args.prefix},
                      {"nodes", instance.network.node_count()},
                      {"edges", instance.network.edge_count()},
                      {"communities", instance.communities.size()},
                      {"community_sizes", sizes},
                      {"targets", instance.targets},
                      {"mixing", s.mixing},
                      {"mean_degree", s.mean_degree},
                      {"effective_d_max", s.effective_d_max},
                      {"clamped_nodes", s.clamped_nodes},
                      {"dropped_stubs", s.dropped_stubs}}
                     .dump(2)
              << '\n';
    return 0;
}

// --- eval -------------------------------------------------------------------

struct EvalArgs {
    std::string truth;
    std::string truth_subspace;
    std::string result;
    std::string out;
};

int cmd_eval(const EvalArgs& args) {
    const PlantedSubspaces planted = read_planted_subspaces(args.truth_subspace);
    const auto truth_lists = read_id_lists(args.truth);
    if (truth_lists.empty()) throw InputError("'" + args.truth + "' holds no communities");

    json result;
    {
        std::ifstream in(args.result);
        if (!in) throw InputError("cannot open '" + args.result + "'");
        try {
            result = json::parse(in);
        } catch (const json::exception& e) {
            throw InputError(args.result + ": " + e.what());
        }
    }

    // Shared ID dictionary for truth and detected sets.
    std::map<std::string, NodeId> index;
    const auto intern = [&](const std::vector<std::string>& ids) {
        std::vector<NodeId> nodes;
        for (const auto& id : ids) nodes.push_back(index.emplace(id, static_cast<NodeId>(index.size())).first->second);
        return make_node_set(std::move(nodes));
    };

    std::vector<NodeSet> truth;
    if (planted.targets.empty()) {
        for (const auto& ids : truth_lists) truth.push_back(intern(ids));
    } else {
        for (std::size_t i : planted.targets) {
            if (i >= truth_lists.size())
                throw InputError("target community " + std::to_string(i) + " is missing from '" + args.truth + "'");
            truth.push_back(intern(truth_lists[i]));
        }
    }

    EvalReport report;
    std::vector<NodeSet> detected;
    try {
        const auto mined = Subspace::normalize(result.at("subspace").get<std::vector<double>>());
        if (mined.size() != planted.target_subspace.size())
            throw InputError("result subspace has " + std::to_string(mined.size()) +
                             " weights but the planted one has " + std::to_string(planted.target_subspace.size()));
        report.ss = quality_ss(mined, planted.target_subspace);
        for (const auto& c : result.at("communities")) detected.push_back(intern(c.at("members").get<std::vector<std::string>>()));
    } catch (const json::exception& e) {
        throw InputError(args.result + ": " + e.what());
    }
    report.quality = quality_q(truth, detected);
    report.meta = {{"truth", args.truth}, {"result", args.result}, {"detected", detected.size()}};

    char line[96];
    std::snprintf(line, sizeof(line), "SS=%.4f Q=%.4f", report.ss, report.quality.q);
    std::cout << line << '\n';
    if (!args.out.empty()) emit(to_json(report), args.out);
    return 0;
}

// --- trials -----------------------------------------------------------------

struct TrialsArgs {
    std::string prefix;
    std::size_t trials = 20;
    double beta = kDefaultRedundancy;
    bool timing = false;
    CommonFlags common;
};

int cmd_trials(const TrialsArgs& args) {
    const AttributedNetwork net = load_network(args.prefix + ".edges", args.prefix + ".attrs");
    const PlantedSubspaces planted = read_planted_subspaces(args.prefix + ".subspace.json");
    const auto lists = read_id_lists(args.prefix + ".truth");
    GroundTruth truth{{}, planted.target_subspace};
    for (std::size_t i : planted.targets) {
        if (i >= lists.size()) throw InputError("target community " + std::to_string(i) + " missing from truth file");
        std::vector<NodeId> nodes;
        for (const auto& id : lists[i]) nodes.push_back(net.require(id));
        truth.targets.push_back(make_node_set(std::move(nodes)));
    }
    TrialOptions options;
    options.trials = args.trials;
    options.seed = args.common.seed;
    options.mining = {args.beta, args.common.seed, args.common.threads};
    const TrialSummary summary = run_trials(net, truth, options);
    json doc = to_json(summary, args.timing);
    for (auto& row : doc["trials"]) {
        const auto samples = row["samples"].get<std::vector<NodeId>>();
        row["samples"] = {net.id(samples[0]), net.id(samples[1])};
    }
    doc["meta"] = {{"seed", args.common.seed}, {"beta", args.beta}, {"prefix", args.prefix}};
    emit(doc, args.common.out);
    std::cerr << "mean SS=" << summary.mean_ss << " mean Q=" << summary.mean_q << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Target subspace and community mining on attributed networks"};
    app.require_subcommand(1);

    MineArgs mine;
    auto* mine_cmd = app.add_subcommand("mine", "Mine the target subspace and target communities");
    mine_cmd->add_option("--graph", mine.graph, "Edge list")->required();
    mine_cmd->add_option("--attrs", mine.attrs, "Attribute TSV")->required();
    mine_cmd->add_option("--samples", mine.samples, "Comma-separated sample node IDs (two or more)")->required();
    mine_cmd->add_option("--beta", mine.beta, "Redundancy threshold in [0, 1]")
        ->check(CLI::Range(0.0, 1.0))
        ->capture_default_str();
    add_common(mine_cmd, mine.common);

    EgoArgs ego;
    auto* ego_cmd = app.add_subcommand("ego", "Subspaces and communities around one node");
    ego_cmd->add_option("--graph", ego.graph, "Edge list")->required();
    ego_cmd->add_option("--attrs", ego.attrs, "Attribute TSV")->required();
    ego_cmd->add_option("--node", ego.node, "Node ID")->required();
    add_common(ego_cmd, ego.common);

    GenbenchArgs gen;
    auto& cfg = gen.config;
    auto* gen_cmd = app.add_subcommand("genbench", "Generate an attributed benchmark network");
    gen_cmd->add_option("--tau1", cfg.tau1, "Degree exponent")->capture_default_str();
    gen_cmd->add_option("--tau2", cfg.tau2, "Community-size exponent")->capture_default_str();
    gen_cmd->add_option("--n", cfg.n, "Nodes")->capture_default_str();
    gen_cmd->add_option("--d-avg", cfg.d_avg, "Average degree")->capture_default_str();
    gen_cmd->add_option("--d-max", cfg.d_max, "Maximum degree")->capture_default_str();
    gen_cmd->add_option("--c-min", cfg.c_min, "Smallest community")->capture_default_str();
    gen_cmd->add_option("--c-max", cfg.c_max, "Largest community")->capture_default_str();
    gen_cmd->add_option("--mu", cfg.mu, "Mixing parameter")->capture_default_str();
    gen_cmd->add_option("--r", cfg.r, "Attributes")->capture_default_str();
    gen_cmd->add_option("--t", cfg.t, "Focus attributes per community")->capture_default_str();
    gen_cmd->add_option("--b", cfg.b, "Target communities")->capture_default_str();
    gen_cmd->add_option("--p", cfg.p, "Similarity probability")->capture_default_str();
    gen_cmd->add_option("--kind", gen.kind, "Attribute kind: num, bin or cat")->capture_default_str();
    gen_cmd->add_option("--seed", cfg.seed, "Random seed")->capture_default_str();
    gen_cmd->add_option("--out", gen.prefix, "Output prefix")->capture_default_str();

    EvalArgs eval;
    auto* eval_cmd = app.add_subcommand("eval", "Score a mining result against the planted truth");
    eval_cmd->add_option("--truth", eval.truth, "Ground-truth communities file")->required();
    eval_cmd->add_option("--truth-subspace", eval.truth_subspace, "Planted subspace JSON")->required();
    eval_cmd->add_option("--result", eval.result, "Output of mine")->required();
    eval_cmd->add_option("--out", eval.out, "Report JSON path");

    TrialsArgs trials;
    auto* trials_cmd = app.add_subcommand("trials", "Repeated mining runs on a generated benchmark");
    trials_cmd->add_option("--bench", trials.prefix, "Benchmark prefix written by genbench")->required();
    trials_cmd->add_option("--trials", trials.trials, "Number of runs")->capture_default_str();
    trials_cmd->add_option("--beta", trials.beta, "Redundancy threshold in [0, 1]")
        ->check(CLI::Range(0.0, 1.0))
        ->capture_default_str();
    trials_cmd->add_flag("--timing", trials.timing, "Include per-trial timings");
    add_common(trials_cmd, trials.common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInput;
    }

    try {
        if (*mine_cmd) return cmd_mine(mine);
        if (*ego_cmd) return cmd_ego(ego);
        if (*gen_cmd) return cmd_genbench(gen);
        if (*eval_cmd) return cmd_eval(eval);
        if (*trials_cmd) return cmd_trials(trials);
    } catch (const InputError& e) {
        log::error(e.what());
        return kExitInput;
    } catch (const AlgorithmError& e) {
        log::error(e.what());
        return kExitRuntime;
    } catch (const std::exception& e) {
        log::error(std::string("unexpected failure: ") + e.what());
        return kExitRuntime;
    }
    return kExitInput;
}
