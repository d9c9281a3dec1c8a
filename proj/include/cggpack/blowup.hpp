#pragma once

#include "cggpack/graph.hpp"

namespace cggpack {

/// t-regular blowup H[t]: each vertex becomes an interval of t consecutive
/// vertices (vertex v -> positions v*t .. v*t+t-1), each edge a complete
/// bipartite bundle between the two intervals.
Graph blowup(const Graph& h, int t);

/// Irregular blowup of the ordered triangle: three consecutive intervals of
/// sizes e12*e13*t, e12*e23*t, e13*e23*t with all cross pairs present.
Graph irregular_blowup_k3(int e12, int e13, int e23, int t);

} // namespace cggpack
