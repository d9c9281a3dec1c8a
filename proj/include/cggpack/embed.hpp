#pragma once

#include "cggpack/graph.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace cggpack {

/// An order-preserving injective map of a pattern into a host, pattern vertex
/// i -> map[i]. For cggs the image must respect the cyclic order (reflections
/// are not embeddings); for ordered graphs the map is strictly increasing.
struct Embedding {
    std::vector<int> map;
};

/// Independent validity check: order preservation plus every pattern edge
/// landing on a host edge. Used by tests and by the packing verifier; the
/// enumerators do not get to vouch for themselves.
bool embedding_valid(const Graph& pattern, const Graph& host, const Embedding& e);

/// All sub-copies of `pattern` in `host`, one canonical embedding per distinct
/// sub-cgg (cyclic relabelings of a symmetric pattern map to the same vertex
/// and edge image and are reported once). Deterministic order. `limit` caps
/// the output when set.
std::vector<Embedding> enumerate_embeddings(const Graph& pattern, const Graph& host,
                                            std::optional<std::int64_t> limit = std::nullopt);

/// Number of order-preserving maps (cyclic relabelings counted separately).
std::int64_t count_embedding_maps(const Graph& pattern, const Graph& host);

// Edge image of an embedding, normalized and sorted.
std::vector<Edge> embedding_edge_image(const Graph& pattern, const Embedding& e);

} // namespace cggpack
