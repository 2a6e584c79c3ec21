#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "tscm/metrics.hpp"

namespace tscm {

/// LFR-style attributed benchmark parameters. Defaults follow the standard
/// experimental setting (n = 5000, communities of 40-80 nodes, 20 attributes).
struct BenchmarkConfig {
    double tau1 = 2.0;  // degree power-law exponent
    double tau2 = 1.0;  // community-size power-law exponent
    std::size_t n = 5000;
    double d_avg = 30.0;
    std::size_t d_max = 100;
    std::size_t c_min = 40;
    std::size_t c_max = 80;
    double mu = 0.2;     // fraction of each node's edges leaving its community
    std::size_t r = 20;  // attributes
    std::size_t t = 6;   // focus attributes per community
    std::size_t b = 5;   // target communities
    double p = 0.9;      // probability of taking the community's value on a focus attribute
    AttributeKind kind = AttributeKind::numerical;
    std::uint64_t seed = 1;

    /// Throws InputError on parameters no instance can satisfy.
    void validate() const;
};

inline constexpr std::size_t kCategoryDomain = 10;
inline constexpr double kNumericalNoise = 0.05;

struct BenchmarkStats {
    std::size_t effective_d_max = 0;  // degree cap so internal degrees fit in c_max
    std::size_t dropped_stubs = 0;
    std::size_t clamped_nodes = 0;  // internal degree reduced to fit the community
    double mixing = 0.0;            // external edges / edges
    double mean_degree = 0.0;
};

struct BenchmarkInstance {
    BenchmarkConfig config;
    AttributedNetwork network;
    std::vector<NodeSet> communities;        // partition of the nodes
    std::vector<std::vector<std::size_t>> focus;  // focus attributes per community
    std::vector<Subspace> planted;           // 1/t on the focus attributes
    std::vector<std::size_t> targets;        // indices of target communities, sorted
    Subspace target_subspace;
    BenchmarkStats stats;

    std::vector<NodeSet> target_communities() const;
};

BenchmarkInstance generate(const BenchmarkConfig& config);

/// External-edge fraction of a partition.
double empirical_mixing(const AttributedNetwork& net, const std::vector<NodeSet>& communities);

/// Writes <prefix>.edges, <prefix>.attrs, <prefix>.truth (one community per
/// line, space-separated node IDs) and <prefix>.subspace.json.
void write_benchmark(const BenchmarkInstance& instance, const std::string& prefix);

/// Planted-subspace sidecar contents.
struct PlantedSubspaces {
    Subspace target_subspace;
    std::vector<std::size_t> targets;
    std::vector<Subspace> communities;
};

PlantedSubspaces read_planted_subspaces(const std::filesystem::path& path);

/// Ground-truth file as lists of node IDs.
std::vector<std::vector<std::string>> read_id_lists(const std::filesystem::path& path);

}  // namespace tscm
