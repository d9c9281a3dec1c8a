#pragma once

#include "cggpack/embed.hpp"
#include "cggpack/graph.hpp"
#include "cggpack/rational.hpp"

#include <string>
#include <vector>

namespace cggpack {

/// Edge-disjoint copies of a pattern inside a host. Copies are stored flat
/// (|V(pattern)| host vertices per copy) so multi-million-copy packings stay
/// compact. Constructors fill it in; trust comes only from verify_packing.
struct Packing {
    Graph host;
    Graph pattern;
    std::vector<int> flat; // copy_count() * pattern.n vertex images

    long long copy_count() const {
        return pattern.n == 0 ? 0 : static_cast<long long>(flat.size()) / pattern.n;
    }
    Embedding copy(long long i) const;
    void push_copy(const Embedding& e);

    long long covered_edges() const { return copy_count() * pattern.edge_count(); }
    Rat coverage() const;

    /// FNV-1a over the flat copy stream; stands in for the full copy list in
    /// result files at large scale.
    std::uint64_t digest() const;
};

struct VerifyReport {
    bool ok = false;
    long long copies_checked = 0;
    std::vector<long long> bad_embeddings;                    // order or edge violations
    std::vector<std::pair<long long, long long>> overlaps;    // first offending copy pairs
    long long distinct_covered = 0;
    Rat coverage;
    bool coverage_matches = false;
    std::string summary() const;
};

/// Independent re-check of a packing: every copy order-preserving with all
/// pattern edges on host edges, pairwise edge-disjointness via a usage bitmap,
/// coverage recomputed. Violations are reported, not thrown.
VerifyReport verify_packing(const Packing& p);

// Triangular edge index helpers shared by the packers.
inline long long edge_id(int n, int u, int v) {
    if (u > v) std::swap(u, v);
    return static_cast<long long>(u) * n - static_cast<long long>(u) * (u + 1) / 2 + (v - u - 1);
}

} // namespace cggpack
