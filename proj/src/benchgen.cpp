#include "tscm/benchgen.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>
#include <unordered_set>

#include <json.hpp>

#include "tscm/log.hpp"
#include "tscm/parallel.hpp"

namespace tscm {
namespace {

constexpr std::size_t kMatchRounds = 1000;
// Above this fraction of unmatched stubs the degree sequence is reported as
// not realizable instead of silently thinned.
constexpr double kMaxDroppedFraction = 0.05;

// Independent streams of the generator.
enum Stream : std::uint64_t { kDegrees = 1, kSizes, kAssign, kWiring, kFocus, kValues };

/// Continuous power law x^-tau on [lo, hi].
class PowerLaw {
  public:
    PowerLaw(double tau, double lo, double hi) : tau_(tau), lo_(lo), hi_(hi) {}

    double sample(Rng& rng) const {
        const double u = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
        if (lo_ == hi_) return lo_;
        if (std::abs(tau_ - 1.0) < 1e-12) return lo_ * std::pow(hi_ / lo_, u);
        const double e = 1.0 - tau_;
        const double a = std::pow(lo_, e);
        const double b = std::pow(hi_, e);
        return std::pow(a + u * (b - a), 1.0 / e);
    }

    /// Mean by Simpson integration in log space.
    double mean() const {
        if (lo_ == hi_) return lo_;
        constexpr int kSteps = 2000;
        const double h = (std::log(hi_) - std::log(lo_)) / kSteps;
        double num = 0.0;
        double den = 0.0;
        for (int i = 0; i <= kSteps; ++i) {
            const double x = lo_ * std::exp(h * i);
            const double w = (i == 0 || i == kSteps) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
            const double density = std::pow(x, -tau_) * x;  // dx = x d(log x)
            num += w * density * x;
            den += w * density;
        }
        return num / den;
    }

  private:
    double tau_;
    double lo_;
    double hi_;
};

std::uint64_t pair_key(NodeId a, NodeId b) {
    if (a > b) std::swap(a, b);
    return (static_cast<std::uint64_t>(a) << 32) | b;
}

/// Configuration-model matching of `stubs` (a node repeated once per stub)
/// with rejection. Rejected pairs are first retried by rewiring against a
/// random accepted edge; what is left after the round cap is dropped.
template <class Accept>
std::vector<Edge> match_stubs(std::vector<NodeId> stubs, Accept accept,
                              std::unordered_set<std::uint64_t>& present, Rng& rng,
                              std::size_t& dropped) {
    std::vector<Edge> edges;
    const auto fresh = [&](NodeId a, NodeId b) {
        return a != b && accept(a, b) && !present.contains(pair_key(a, b));
    };
    const auto insert = [&](NodeId a, NodeId b) {
        present.insert(pair_key(a, b));
        return Edge{std::min(a, b), std::max(a, b)};
    };

    for (std::size_t round = 0; round < kMatchRounds && stubs.size() >= 2; ++round) {
        std::shuffle(stubs.begin(), stubs.end(), rng);
        std::vector<NodeId> rest;
        for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
            const NodeId a = stubs[i];
            const NodeId b = stubs[i + 1];
            if (fresh(a, b)) {
                edges.push_back(insert(a, b));
                continue;
            }
            if (!edges.empty()) {
                const std::size_t k = std::uniform_int_distribution<std::size_t>(0, edges.size() - 1)(rng);
                NodeId c = edges[k].first;
                NodeId d = edges[k].second;
                if (rng() & 1) std::swap(c, d);
                if (fresh(a, c) && fresh(b, d) && pair_key(a, c) != pair_key(b, d)) {
                    present.erase(pair_key(c, d));
                    edges[k] = insert(a, c);
                    edges.push_back(insert(b, d));
                    continue;
                }
            }
            rest.push_back(a);
            rest.push_back(b);
        }
        if (stubs.size() % 2 == 1) rest.push_back(stubs.back());
        stubs = std::move(rest);
    }
    dropped += stubs.size();
    return edges;
}

std::vector<std::size_t> random_subset(std::size_t r, std::size_t t, Rng& rng) {
    std::vector<std::size_t> all(r);
    std::iota(all.begin(), all.end(), 0);
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(t);
    std::sort(all.begin(), all.end());
    return all;
}

Subspace focus_subspace(std::size_t r, const std::vector<std::size_t>& focus) {
    std::vector<double> w(r, 0.0);
    for (std::size_t t : focus) w[t] = 1.0;
    return Subspace::normalize(std::move(w));
}

std::size_t degree_cap(const BenchmarkConfig& cfg) {
    if (cfg.mu >= 1.0) return cfg.d_max;
    const auto fit = static_cast<std::size_t>(
        std::floor((static_cast<double>(cfg.c_max) - 1.0) / (1.0 - cfg.mu) + 1e-9));
    return std::min(cfg.d_max, std::max<std::size_t>(fit, 1));
}

std::vector<std::size_t> sample_degrees(const BenchmarkConfig& cfg, std::size_t cap, Rng& rng) {
    const double hi = static_cast<double>(cap);
    if (cfg.d_avg > hi)
        throw InputError("average degree " + format_double(cfg.d_avg) +
                         " exceeds the largest degree that fits the communities (" +
                         std::to_string(cap) + ")");
    // Bisection on the lower bound so that the law's mean hits d_avg.
    double lo_bound = 1.0;
    double hi_bound = hi;
    if (PowerLaw(cfg.tau1, 1.0, hi).mean() >= cfg.d_avg) {
        log::warn("average degree is below the power law's minimum mean; using d_min = 1");
        hi_bound = 1.0;
    }
    for (int it = 0; it < 100 && hi_bound - lo_bound > 1e-9; ++it) {
        const double mid = 0.5 * (lo_bound + hi_bound);
        if (PowerLaw(cfg.tau1, mid, hi).mean() < cfg.d_avg) lo_bound = mid;
        else hi_bound = mid;
    }
    const PowerLaw law(cfg.tau1, hi_bound, hi);
    std::vector<std::size_t> degrees(cfg.n);
    for (auto& k : degrees)
        k = std::clamp<std::size_t>(static_cast<std::size_t>(std::llround(law.sample(rng))), 1, cap);
    return degrees;
}

std::vector<std::size_t> sample_sizes(const BenchmarkConfig& cfg, Rng& rng) {
    const PowerLaw law(cfg.tau2, static_cast<double>(cfg.c_min), static_cast<double>(cfg.c_max));
    const auto draw = [&] {
        return std::clamp<std::size_t>(static_cast<std::size_t>(std::llround(law.sample(rng))),
                                       cfg.c_min, cfg.c_max);
    };
    std::vector<std::size_t> sizes;
    std::size_t total = 0;
    while (total < cfg.n) {
        sizes.push_back(draw());
        total += sizes.back();
    }
    // Trim the overshoot from communities above c_min; if they are all at the
    // minimum, drop the last community and grow the others instead.
    std::size_t excess = total - cfg.n;
    std::vector<std::size_t> shrinkable;
    for (std::size_t i = 0; i < sizes.size(); ++i)
        for (std::size_t k = cfg.c_min; k < sizes[i]; ++k) shrinkable.push_back(i);
    if (shrinkable.size() >= excess) {
        std::shuffle(shrinkable.begin(), shrinkable.end(), rng);
        for (std::size_t k = 0; k < excess; ++k) --sizes[shrinkable[k]];
        return sizes;
    }
    total -= sizes.back();
    sizes.pop_back();
    std::size_t missing = cfg.n - total;
    std::vector<std::size_t> growable;
    for (std::size_t i = 0; i < sizes.size(); ++i)
        for (std::size_t k = sizes[i]; k < cfg.c_max; ++k) growable.push_back(i);
    if (growable.size() < missing)
        throw InputError("community sizes in [" + std::to_string(cfg.c_min) + ", " +
                         std::to_string(cfg.c_max) + "] cannot sum to n = " + std::to_string(cfg.n));
    std::shuffle(growable.begin(), growable.end(), rng);
    for (std::size_t k = 0; k < missing; ++k) ++sizes[growable[k]];
    return sizes;
}

struct Assignment {
    std::vector<std::size_t> community;  // per node
    std::vector<std::size_t> internal;   // internal degree per node
    std::size_t clamped = 0;
};

/// Nodes in decreasing internal-degree order go to a random free slot among
/// communities large enough to host their internal degree.
Assignment assign_nodes(const std::vector<std::size_t>& degrees, const std::vector<std::size_t>& sizes,
                        double mu, Rng& rng) {
    const std::size_t n = degrees.size();
    Assignment out{std::vector<std::size_t>(n), std::vector<std::size_t>(n), 0};
    for (std::size_t v = 0; v < n; ++v)
        out.internal[v] = static_cast<std::size_t>(std::llround((1.0 - mu) * static_cast<double>(degrees[v])));

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return out.internal[a] > out.internal[b]; });

    std::vector<std::size_t> free = sizes;
    for (std::size_t v : order) {
        std::size_t slots = 0;
        for (std::size_t c = 0; c < sizes.size(); ++c)
            if (sizes[c] > out.internal[v]) slots += free[c];
        if (slots == 0) {
            // No community can hold this node's internal degree: take the
            // largest one with room and send the excess outside.
            std::size_t best = sizes.size();
            for (std::size_t c = 0; c < sizes.size(); ++c)
                if (free[c] > 0 && (best == sizes.size() || sizes[c] > sizes[best])) best = c;
            out.internal[v] = sizes[best] - 1;
            ++out.clamped;
            out.community[v] = best;
            --free[best];
            continue;
        }
        std::size_t pick = std::uniform_int_distribution<std::size_t>(0, slots - 1)(rng);
        for (std::size_t c = 0; c < sizes.size(); ++c) {
            if (sizes[c] <= out.internal[v]) continue;
            if (pick < free[c]) {
                out.community[v] = c;
                --free[c];
                break;
            }
            pick -= free[c];
        }
    }
    return out;
}

double draw_value(AttributeKind kind, Rng& rng) {
    switch (kind) {
        case AttributeKind::numerical: return std::uniform_real_distribution<double>(0.0, 1.0)(rng);
        case AttributeKind::binary: return static_cast<double>(rng() & 1);
        case AttributeKind::categorical:
            return static_cast<double>(std::uniform_int_distribution<std::size_t>(0, kCategoryDomain - 1)(rng));
    }
    return 0.0;
}

AttributeValue as_value(AttributeKind kind, double x) {
    switch (kind) {
        case AttributeKind::numerical: return Numerical{x};
        case AttributeKind::binary: return Binary{x == 1.0};
        case AttributeKind::categorical: return Categorical{static_cast<std::uint32_t>(x)};
    }
    return Numerical{x};
}

}  // namespace

void BenchmarkConfig::validate() const {
    if (n == 0) throw InputError("n must be positive");
    if (c_min == 0 || c_min > c_max) throw InputError("community sizes need 1 <= c_min <= c_max");
    if (c_min > n) throw InputError("c_min exceeds n");
    if (r == 0 || t == 0 || t > r) throw InputError("subspace size must satisfy 1 <= t <= r");
    if (!(mu >= 0.0 && mu <= 1.0)) throw InputError("mixing parameter must lie in [0, 1]");
    if (!(p >= 0.0 && p <= 1.0)) throw InputError("similarity probability must lie in [0, 1]");
    if (!(d_avg >= 1.0) || static_cast<double>(d_max) < d_avg)
        throw InputError("degrees need 1 <= d_avg <= d_max");
    if (d_max >= n) throw InputError("d_max must be below n");
    if (!std::isfinite(tau1) || !std::isfinite(tau2) || tau1 < 0.0 || tau2 < 0.0)
        throw InputError("power-law exponents must be finite and nonnegative");
    // Some number of communities q must satisfy q*c_min <= n <= q*c_max.
    const std::size_t q = (n + c_max - 1) / c_max;
    if (q * c_min > n)
        throw InputError("community sizes in [" + std::to_string(c_min) + ", " + std::to_string(c_max) +
                         "] cannot sum to n = " + std::to_string(n));
}

std::vector<NodeSet> BenchmarkInstance::target_communities() const {
    std::vector<NodeSet> out;
    for (std::size_t i : targets) out.push_back(communities[i]);
    return out;
}

BenchmarkInstance generate(const BenchmarkConfig& cfg) {
    cfg.validate();
    BenchmarkStats stats;
    stats.effective_d_max = degree_cap(cfg);
    if (stats.effective_d_max < cfg.d_max)
        log::info("degree cap lowered to " + std::to_string(stats.effective_d_max) +
                  " so internal degrees fit in communities of at most c_max nodes");

    Rng degree_rng(derive_seed(cfg.seed, kDegrees));
    const auto degrees = sample_degrees(cfg, stats.effective_d_max, degree_rng);
    Rng size_rng(derive_seed(cfg.seed, kSizes));
    const auto sizes = sample_sizes(cfg, size_rng);
    if (cfg.b > sizes.size())
        throw InputError("b = " + std::to_string(cfg.b) + " exceeds the community count " +
                         std::to_string(sizes.size()));

    Rng assign_rng(derive_seed(cfg.seed, kAssign));
    Assignment assignment = assign_nodes(degrees, sizes, cfg.mu, assign_rng);
    stats.clamped_nodes = assignment.clamped;
    if (assignment.clamped > 0)
        log::info(std::to_string(assignment.clamped) + " nodes had their internal degree clamped");

    std::vector<std::vector<NodeId>> members(sizes.size());
    for (std::size_t v = 0; v < cfg.n; ++v)
        members[assignment.community[v]].push_back(static_cast<NodeId>(v));

    // Internal and external stub counts; each stub list needs an even length.
    std::vector<std::size_t> internal = assignment.internal;
    std::vector<std::size_t> external(cfg.n);
    for (std::size_t v = 0; v < cfg.n; ++v) external[v] = degrees[v] - std::min(degrees[v], internal[v]);

    Rng wiring_rng(derive_seed(cfg.seed, kWiring));
    std::unordered_set<std::uint64_t> present;
    std::vector<Edge> edges;
    std::size_t total_stubs = 0;
    for (const auto& group : members) {
        std::size_t sum = 0;
        for (NodeId v : group) sum += internal[v];
        if (sum % 2 == 1) {
            std::vector<NodeId> candidates;
            for (NodeId v : group)
                if (internal[v] > 0) candidates.push_back(v);
            const NodeId v = candidates[std::uniform_int_distribution<std::size_t>(0, candidates.size() - 1)(wiring_rng)];
            --internal[v];
            ++external[v];
        }
        std::vector<NodeId> stubs;
        for (NodeId v : group) stubs.insert(stubs.end(), internal[v], v);
        total_stubs += stubs.size();
        auto wired = match_stubs(std::move(stubs), [](NodeId, NodeId) { return true; }, present,
                                 wiring_rng, stats.dropped_stubs);
        edges.insert(edges.end(), wired.begin(), wired.end());
    }
    {
        std::size_t sum = std::accumulate(external.begin(), external.end(), std::size_t{0});
        if (sum % 2 == 1) {
            std::vector<NodeId> candidates;
            for (std::size_t v = 0; v < cfg.n; ++v)
                if (external[v] > 0) candidates.push_back(static_cast<NodeId>(v));
            --external[candidates[std::uniform_int_distribution<std::size_t>(0, candidates.size() - 1)(wiring_rng)]];
        }
        std::vector<NodeId> stubs;
        for (std::size_t v = 0; v < cfg.n; ++v) stubs.insert(stubs.end(), external[v], static_cast<NodeId>(v));
        total_stubs += stubs.size();
        const auto& community = assignment.community;
        auto wired = match_stubs(
            std::move(stubs), [&](NodeId a, NodeId b) { return community[a] != community[b]; }, present,
            wiring_rng, stats.dropped_stubs);
        edges.insert(edges.end(), wired.begin(), wired.end());
    }
    if (stats.dropped_stubs > 0) {
        const double fraction = static_cast<double>(stats.dropped_stubs) / static_cast<double>(total_stubs);
        if (fraction > kMaxDroppedFraction)
            throw InputError("degree sequence could not be realized: " + std::to_string(stats.dropped_stubs) +
                             " of " + std::to_string(total_stubs) + " stubs unmatched after " +
                             std::to_string(kMatchRounds) + " rounds");
        log::info("dropped " + std::to_string(stats.dropped_stubs) + " unmatched stubs");
    }

    // Focus sets: one shared set for the targets, an own set for every other
    // community.
    Rng focus_rng(derive_seed(cfg.seed, kFocus));
    std::vector<std::size_t> order(sizes.size());
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), focus_rng);
    std::vector<std::size_t> targets(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(cfg.b));
    std::sort(targets.begin(), targets.end());
    const auto target_focus = random_subset(cfg.r, cfg.t, focus_rng);
    std::vector<std::vector<std::size_t>> focus(sizes.size());
    for (std::size_t c = 0; c < sizes.size(); ++c)
        focus[c] = std::binary_search(targets.begin(), targets.end(), c) ? target_focus
                                                                         : random_subset(cfg.r, cfg.t, focus_rng);

    // Per-community characteristic values on the focus attributes.
    Rng value_rng(derive_seed(cfg.seed, kValues));
    std::vector<std::vector<double>> characteristic(sizes.size(), std::vector<double>(cfg.r, 0.0));
    for (std::size_t c = 0; c < sizes.size(); ++c) {
        for (std::size_t t : focus[c]) {
            characteristic[c][t] = cfg.kind == AttributeKind::binary ? 1.0 : draw_value(cfg.kind, value_rng);
        }
    }

    std::vector<AttributeSpec> specs(cfg.r);
    for (std::size_t t = 0; t < cfg.r; ++t) {
        specs[t].name = "a" + std::to_string(t);
        specs[t].kind = cfg.kind;
        if (cfg.kind == AttributeKind::categorical)
            for (std::size_t k = 0; k < kCategoryDomain; ++k) specs[t].categories.push_back("c" + std::to_string(k));
    }
    NetworkBuilder builder(std::move(specs));
    std::normal_distribution<double> noise(0.0, kNumericalNoise);
    std::bernoulli_distribution similar(cfg.p);
    std::vector<AttributeValue> values(cfg.r);
    for (std::size_t v = 0; v < cfg.n; ++v) {
        const std::size_t c = assignment.community[v];
        for (std::size_t t = 0; t < cfg.r; ++t) {
            double x = 0.0;
            const bool on_focus = std::binary_search(focus[c].begin(), focus[c].end(), t);
            if (on_focus && similar(value_rng)) {
                x = characteristic[c][t];
                if (cfg.kind == AttributeKind::numerical) x = std::clamp(x + noise(value_rng), 0.0, 1.0);
            } else {
                x = draw_value(cfg.kind, value_rng);
            }
            values[t] = as_value(cfg.kind, x);
        }
        builder.add_node(std::to_string(v), values);
    }
    std::sort(edges.begin(), edges.end());
    for (const Edge& e : edges) builder.add_edge(e.first, e.second);

    BenchmarkInstance out{cfg, std::move(builder).build(), {}, std::move(focus), {}, std::move(targets),
                          focus_subspace(cfg.r, target_focus), stats};
    for (auto& group : members) out.communities.push_back(make_node_set(std::move(group)));
    for (const auto& f : out.focus) out.planted.push_back(focus_subspace(cfg.r, f));
    out.stats.mixing = empirical_mixing(out.network, out.communities);
    out.stats.mean_degree =
        2.0 * static_cast<double>(out.network.edge_count()) / static_cast<double>(out.network.node_count());
    return out;
}

double empirical_mixing(const AttributedNetwork& net, const std::vector<NodeSet>& communities) {
    constexpr std::size_t kUnassigned = static_cast<std::size_t>(-1);
    std::vector<std::size_t> label(net.node_count(), kUnassigned);
    for (std::size_t c = 0; c < communities.size(); ++c)
        for (NodeId v : communities[c]) label[v] = c;
    if (net.edge_count() == 0) return 0.0;
    std::size_t external = 0;
    for (const Edge& e : net.edges())
        if (label[e.first] != label[e.second] || label[e.first] == kUnassigned) ++external;
    return static_cast<double>(external) / static_cast<double>(net.edge_count());
}

void write_benchmark(const BenchmarkInstance& instance, const std::string& prefix) {
    save_network(instance.network, prefix + ".edges", prefix + ".attrs");

    std::ofstream truth(prefix + ".truth");
    if (!truth) throw InputError("cannot write '" + prefix + ".truth'");
    for (const auto& community : instance.communities) {
        for (std::size_t i = 0; i < community.size(); ++i)
            truth << (i ? " " : "") << instance.network.id(community[i]);
        truth << '\n';
    }

    const auto& cfg = instance.config;
    nlohmann::json doc;
    doc["attributes"] = nlohmann::json::array();
    for (const auto& spec : instance.network.attributes()) doc["attributes"].push_back(spec.name);
    doc["target_subspace"] = std::vector<double>(instance.target_subspace.weights().begin(),
                                                 instance.target_subspace.weights().end());
    doc["target_communities"] = instance.targets;
    doc["communities"] = nlohmann::json::array();
    for (std::size_t c = 0; c < instance.communities.size(); ++c)
        doc["communities"].push_back({{"focus", instance.focus[c]},
                                      {"subspace", std::vector<double>(instance.planted[c].weights().begin(),
                                                                       instance.planted[c].weights().end())}});
    doc["config"] = {{"tau1", cfg.tau1}, {"tau2", cfg.tau2}, {"n", cfg.n},       {"d_avg", cfg.d_avg},
                     {"d_max", cfg.d_max}, {"c_min", cfg.c_min}, {"c_max", cfg.c_max}, {"mu", cfg.mu},
                     {"r", cfg.r},       {"t", cfg.t},       {"b", cfg.b},       {"p", cfg.p},
                     {"kind", std::string(kind_token(cfg.kind))}, {"seed", cfg.seed}};
    std::ofstream sidecar(prefix + ".subspace.json");
    if (!sidecar) throw InputError("cannot write '" + prefix + ".subspace.json'");
    sidecar << doc.dump(2) << '\n';
}

PlantedSubspaces read_planted_subspaces(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path.string() + "'");
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
        PlantedSubspaces out{Subspace::normalize(doc.at("target_subspace").get<std::vector<double>>()), {}, {}};
        if (doc.contains("target_communities"))
            out.targets = doc.at("target_communities").get<std::vector<std::size_t>>();
        if (doc.contains("communities"))
            for (const auto& c : doc.at("communities"))
                out.communities.push_back(Subspace::normalize(c.at("subspace").get<std::vector<double>>()));
        return out;
    } catch (const nlohmann::json::exception& e) {
        throw InputError(path.string() + ": " + e.what());
    }
}

std::vector<std::vector<std::string>> read_id_lists(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path.string() + "'");
    std::vector<std::vector<std::string>> out;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.front() == '#') continue;
        std::istringstream fields(line);
        std::vector<std::string> ids;
        for (std::string id; fields >> id;) ids.push_back(std::move(id));
        if (!ids.empty()) out.push_back(std::move(ids));
    }
    return out;
}

}  // namespace tscm
