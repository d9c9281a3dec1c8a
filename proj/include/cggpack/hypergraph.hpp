#pragma once

#include "cggpack/feasibility.hpp"
#include "cggpack/graph.hpp"
#include "cggpack/packing.hpp"
#include "cggpack/rng.hpp"
#include "cggpack/weighted.hpp"

#include <functional>
#include <vector>

namespace cggpack {

/// A fractional packing of weight patterns on a host, evaluated per placement:
/// value(subset, r) is phi of the weighted sub-cgg sitting on the ascending
/// host subset with the pattern parts aligned at cyclic rotation r. Both
/// constructors verify the packing equation exactly before returning.
struct PhiOnHost {
    std::function<Rat(const std::vector<int>&, int)> value;
    Rat max_value;
    bool verified = false;
};

/// phi from an LP solution over K_m: constant on each rotation class,
/// independent of the alignment. Verifies M x = 1 exactly.
PhiOnHost phi_from_solution(const CompressedMatrix& m, const std::map<RotationClass, Rat>& x);

/// phi for the scaling routes: H hosts W on all of its vertices and every
/// rotation copy gets 1/sigma, sigma the matching weight sum. Verified
/// per-edge on H. H must have exactly |V(W)| vertices.
PhiOnHost phi_rotation_scaling(const WeightedCgg& w, const Graph& h);

struct CopyHypergraph {
    Graph host;    // the blowup H[t]
    Graph pattern; // G
    int r = 0;     // uniform hyperedge size |E(G)|
    std::vector<std::vector<int>> copies; // vertex maps, pattern vertex -> host vertex
    long long candidates = 0;  // placements examined before random inclusion
    int delta_max = 1;
    int max_part_size = 0;
    Rat phi_max;
};

struct HypergraphOptions {
    long long max_hyperedges = 6'000'000;
};

/// The randomized copy hypergraph of the blowup H[t]: delta-spaced placements
/// of G (per its partition) into the intervals of H[t], each included with
/// probability phi(placement)/max phi. Placements that collapse to the same
/// sub-cgg under a pattern symmetry are enumerated once. Deterministic per
/// seed.
CopyHypergraph build_copy_hypergraph(const Graph& g, const IntervalPartition& p, const Graph& h,
                                     const PhiOnHost& phi, int t, std::uint64_t seed,
                                     const HypergraphOptions& opt = {});

struct NibbleResult {
    std::vector<long long> selected; // indices into hg.copies
    int rounds = 0;
    long long bite_size = 0;
};

/// Core nibble: randomized-order greedy over abstract hyperedges, processed
/// in bite-sized rounds, accepting those still vertex-disjoint. Maximal over
/// the listed hyperedges; epsilon only scales the bite size.
NibbleResult nibble_select(long long n_vertices, const std::vector<std::vector<long long>>& edges,
                           double epsilon, std::uint64_t seed);

/// The copy-hypergraph wrapper: hypergraph vertices are host edges.
NibbleResult nibble_matching(const CopyHypergraph& hg, double epsilon, std::uint64_t seed);

Packing packing_from_selection(const CopyHypergraph& hg, const std::vector<long long>& selected);

} // namespace cggpack
