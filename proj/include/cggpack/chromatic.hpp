#pragma once

#include "cggpack/graph.hpp"

namespace cggpack {

struct ChromaticResult {
    int chi = 0;
    IntervalPartition witness;
};

/// Minimum number of intervals partitioning V(G) with no edge inside a part,
/// with a witness partition. Exact search over breakpoint placements, so
/// intended for pattern-scale graphs (n up to ~20). Edgeless graphs get 1.
ChromaticResult cyclic_chromatic_number(const Graph& g);

ChromaticResult interval_chromatic_number(const Graph& g);

/// True iff some k-interval partition of g is valid (exhaustive).
bool has_valid_partition(const Graph& g, int k);

} // namespace cggpack
