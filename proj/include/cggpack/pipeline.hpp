#pragma once

#include "cggpack/chromatic.hpp"
#include "cggpack/feasibility.hpp"
#include "cggpack/packing.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace cggpack {

struct PackOptions {
    int outer_restarts = 8;
    int inner_restarts = 12;
    int minimal_m_cap = 99;        // scan bound for the w2 > 0 route host
    double epsilon = 0.25;         // nibble knob
    long long greedy_failure_budget = 30'000;
    bool use_witness_m = false;    // use the closed-form witness host instead of the scan
};

struct PackRouteReport {
    std::string route;             // "chi2-greedy", "chi3-triangle", "chi4-c4", "chi4-km"
    int chi_c = 0;
    IntervalPartition partition;
    std::vector<Rat> uniform_weights;  // W' per length
    std::optional<BigInt> witness_m;   // closed-form witness host (w2 > 0 route)
    std::optional<int> m_used;
    int n0 = 0, t = 0;             // composition n0 * t <= n
    Rat outer_coverage;            // over K_{n0}
    Rat inner_coverage;            // over H[t]
    Rat coverage;                  // over K_n
    long long copies = 0;
    bool verified = false;
};

struct PackResult {
    Packing packing;
    PackRouteReport report;
};

/// End-to-end packer for cggs with chi_c <= 4, routed by the chromatic case:
/// chi_c <= 2 greedy; chi_c = 3 through the triangle host; chi_c = 4 through
/// the plane 4-cycle when the diagonal weight vanishes, else through a
/// feasible complete host K_m. Composed routes pick n0 ~ sqrt(n) and pack
/// K_{n0*t} inside K_n. The output always passes the independent verifier
/// before being returned. chi_c > 4 raises route_error pointing at the
/// long-edge condition.
PackResult pack_chi_le4(const Graph& g, int n, std::uint64_t seed, const PackOptions& opt = {});

struct OrderedLevel {
    int lo = 0, hi = 0;
    int n_prime = 0;
    int sizes[3] = {0, 0, 0};
    int i4 = 0;
    long long candidates = 0;
    long long copies = 0;
};

struct OrderedPackOptions {
    double epsilon = 0.25;     // sampling budget scale: ~ceil(2/eps) per vertex
    int cutoff = 0;            // recursion stops below this n'; 0 = default formula
    long long reject_cutoff = 30'000;
};

struct OrderedPackResult {
    Packing packing;
    int chi = 0;
    std::string route;
    int e12 = 0, e13 = 0, e23 = 0, q = 0;
    int cutoff = 0;
    std::vector<OrderedLevel> levels; // DFS pre-order recursion trace
    bool verified = false;
};

/// Recursive packer for ordered graphs with chi_< = 3: each level carves the
/// current interval into the irregular-blowup proportions (remainder below q
/// is abandoned), packs the cross edges by a sampled nibble over delta-spaced
/// placements, and recurses into the three intervals. chi_< <= 2 routes to
/// greedy. Requires every cross-pair class of the witness partition nonempty.
OrderedPackResult pack_ordered_chi3(const Graph& g, int n, double epsilon, std::uint64_t seed,
                                    const OrderedPackOptions& opt = {});

} // namespace cggpack
