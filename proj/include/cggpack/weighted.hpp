#pragma once

#include "cggpack/graph.hpp"
#include "cggpack/rational.hpp"

#include <optional>
#include <vector>

namespace cggpack {

/// Complete cgg on k vertices with a nonnegative rational weight on every
/// edge. Weights are stored by triangular index over (u,v), u < v.
class WeightedCgg {
public:
    explicit WeightedCgg(int k);
    WeightedCgg(int k, std::vector<Rat> by_length); // length-uniform constructor

    int k() const { return k_; }
    const Rat& weight(int u, int v) const;
    void set_weight(int u, int v, Rat w);

    // Pattern length of the pair {u,v} in the cyclic order on k vertices.
    int pair_length(int u, int v) const { return edge_length(OrderKind::Cyclic, k_, u, v); }

    int max_length() const { return k_ / 2; }

    /// Weights as a per-length vector [w_1 .. w_{floor(k/2)}] when every edge
    /// of equal length carries equal weight; nullopt otherwise.
    std::optional<std::vector<Rat>> length_uniform() const;

    Rat total_weight() const;

    bool operator==(const WeightedCgg&) const = default;

private:
    int index(int u, int v) const;
    int k_;
    std::vector<Rat> w_;
};

/// Weighted representation of G from a valid interval partition P: complete
/// weighted cgg on the parts, weight of {V_i,V_j} = number of G-edges across.
WeightedCgg weighted_representation(const Graph& g, const IntervalPartition& p);

/// One rotation copy of a weight pattern with its fractional value.
struct RotationCopy {
    int rotation = 0;   // representative rotation producing this weight pattern
    int multiplicity = 1;
    Rat phi;
    WeightedCgg weights;
};

struct UniformizeResult {
    WeightedCgg uniform;                 // W' with per-length weights
    std::vector<Rat> by_length;          // [w_1 .. w_{k/2}]
    std::vector<RotationCopy> packing;   // perfect fractional W-packing of W'
};

/// Aggregate W over its k rotations into the length-uniform W' (the weight of
/// the length-(k/2) diagonal class is doubled when k is even), together with
/// the explicit rotation packing witnessing that W' has a perfect fractional
/// W-packing. The packing is re-verified exactly before returning.
UniformizeResult uniformize_by_rotation(const WeightedCgg& w);

/// Exact per-edge check of the perfect-fractional-packing equation against a
/// target weighting on the same vertex set.
bool rotation_packing_satisfies(const std::vector<RotationCopy>& packing,
                                const WeightedCgg& target);

struct LongEdgeReport {
    int k = 0;
    long long c_k = 0;                  // C_k = 16k
    std::vector<long long> e_sizes;     // |E_l| for l = 1..k
    bool e1_nonempty = false;
    bool holds = false;
};

/// Evaluates the many-long-edges packability condition for a 2k-part valid
/// interval partition: E_1 nonempty and |E_k| >= 16k * sum_{l<k} |E_l|.
LongEdgeReport long_edge_condition(const Graph& g, const IntervalPartition& p, int k);

} // namespace cggpack
