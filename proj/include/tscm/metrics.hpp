#pragma once

#include <span>
#include <vector>

#include "tscm/network.hpp"

namespace tscm {

/// Attribute-importance weights: nonnegative, summing to one.
class Subspace {
  public:
    static constexpr double kSumTolerance = 1e-12;

    /// Scales nonnegative weights to unit sum. Throws InputError on negative,
    /// non-finite or all-zero input.
    static Subspace normalize(std::vector<double> weights);
    /// Takes weights that already satisfy the invariant (checked).
    static Subspace from_weights(std::vector<double> weights);
    static Subspace uniform(std::size_t r);

    std::size_t size() const { return weights_.size(); }
    double operator[](std::size_t t) const { return weights_[t]; }
    std::span<const double> weights() const { return weights_; }

    friend bool operator==(const Subspace&, const Subspace&) = default;

  private:
    explicit Subspace(std::vector<double> weights) : weights_(std::move(weights)) {}
    std::vector<double> weights_;
};

/// sqrt(sum_t l_t * diff_t(v,u)^2)
double weighted_distance(const AttributedNetwork& net, const Subspace& l, NodeId v, NodeId u);

/// exp(-weighted_distance), in (0, 1].
double subspace_similarity_nodes(const AttributedNetwork& net, const Subspace& l, NodeId v,
                                 NodeId u);

/// Cosine of two nonnegative weight vectors, clamped to [0, 1]. Throws
/// InputError on length mismatch or an all-zero vector.
double subspace_cosine(std::span<const double> a, std::span<const double> b);
inline double subspace_cosine(const Subspace& a, const Subspace& b) {
    return subspace_cosine(a.weights(), b.weights());
}

}  // namespace tscm
