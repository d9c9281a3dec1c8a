#pragma once

#include "cggpack/matrix.hpp"
#include "cggpack/rational.hpp"
#include "cggpack/simplex.hpp"
#include "cggpack/weighted.hpp"

#include <map>
#include <optional>
#include <vector>

namespace cggpack {

/// Outcome of the feasibility dichotomy over a compressed matrix: exactly one
/// of the two branches is populated, and the populated branch has been
/// verified in exact arithmetic (the primal against every admitted column via
/// the pricing sweep, the certificate likewise).
struct FeasibilityOutcome {
    bool feasible = false;
    std::map<RotationClass, Rat> x;  // support of the fractional solution
    std::vector<Rat> certificate;    // y by length 1..(m-1)/2
    std::int64_t pivots = 0;
    int pricing_rounds = 0;
    int columns_activated = 0;
};

/// Decide M x = 1, x >= 0 by column generation over the full canonical class
/// pool of M: a restricted master is pivoted to optimality, improving columns
/// are priced in by exact reduced cost, and on exhaustion the Farkas vector of
/// the master certifies the whole pool. Deterministic.
FeasibilityOutcome solve_feasibility(const CompressedMatrix& m);

bool verify_solution(const CompressedMatrix& m, const std::map<RotationClass, Rat>& x);
bool verify_farkas(const CompressedMatrix& m, const std::vector<Rat>& y);

/// Witness host size for the 4-vertex two-length pattern:
/// m = 2*ceil(12(w1+w2)^2 / (w1 w2)) + 1. Positive weights required.
BigInt k4_witness_m(const Rat& w1, const Rat& w2);

struct KkWitnessReport {
    int k = 0;
    Rat c_k;                 // 16k
    bool condition_holds = false; // w_k >= C_k * sum_{l<k} w_l
    BigInt m_prime;          // ceil(24 k^3 w_1^{-1} sum_l w_l), only when the condition holds
    BigInt m;                // 2 m' + 1
};

/// Witness host size for 2k-vertex length-uniform patterns with a dominant
/// top length; reports the inequality and, when it holds, the witness m.
KkWitnessReport kk_witness_m(const std::vector<Rat>& weights, int k);

struct MinimalFeasible {
    int m = 0;
    FeasibilityOutcome outcome;
};

/// Linear scan over odd m >= |V(W)| up to m_max for the first feasible
/// compressed system. Purely empirical; callers record what the scan finds.
std::optional<MinimalFeasible> minimal_feasible_m(const WeightedCgg& w, int m_max);

/// A perfect fractional packing materialized over explicit copies of the
/// pattern in K_m, each copy listed by its ascending position set.
struct FractionalPacking {
    int m = 0;
    std::vector<std::pair<std::vector<int>, Rat>> copies; // support only
    bool per_edge_verified = false; // exact per-edge check ran (small m)
};

/// Spread a verified solution x over the copies of W in K_m, constant on each
/// rotation class. Verifies M x = 1 first (precondition) and, when the number
/// of copies is below `materialize_cap`, re-verifies the packing equation on
/// every edge of K_m exactly.
FractionalPacking fractional_packing_from_solution(const CompressedMatrix& m,
                                                   const std::map<RotationClass, Rat>& x,
                                                   long long materialize_cap = 2'000'000);

} // namespace cggpack
