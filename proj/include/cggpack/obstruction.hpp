#pragma once

#include "cggpack/graph.hpp"
#include "cggpack/rational.hpp"

#include <map>

namespace cggpack {

struct LengthProfile {
    int n = 0;
    std::map<int, long long> counts; // length -> number of edges of K_n
    BigInt total_length;
};

LengthProfile length_profile(int n);

enum class TotalLengthMode { Exact, CycleBound };

struct MaxTotalLength {
    BigInt value;
    TotalLengthMode mode = TotalLengthMode::Exact;
};

/// Maximum over all embeddings of G into cyclic K_n of the summed host edge
/// lengths. Exact brute force for |V| <= 8 and n <= 60; plane cycles of any
/// size use the gap bound (total = n once n >= 2|V|). Everything else is a
/// mode error.
MaxTotalLength max_copy_total_length(const Graph& g, int n);

struct CoverageBound {
    int n = 0;
    BigInt max_total_length;  // L
    long long best_edges = 0; // largest M with the M shortest edges packable by mass
    Rat bound;                // M / C(n,2)
    TotalLengthMode mode = TotalLengthMode::Exact;
};

/// Upper bound on the coverage any G-packing of K_n can achieve, from the
/// average-length obstruction made finite: a packing of c copies covers
/// c|E(G)| edges of total length at most c*L, and no M edges have total
/// length below that of the M shortest. Sound for every odd n by exchange.
CoverageBound coverage_upper_bound(const Graph& g, int n);

} // namespace cggpack
