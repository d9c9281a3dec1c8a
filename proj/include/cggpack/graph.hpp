#pragma once

#include "cggpack/rational.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace cggpack {

using Edge = std::pair<int, int>; // normalized u < v

enum class OrderKind { Cyclic, Linear };

/// A graph whose vertices 0..n-1 carry either a cyclic (convex geometric
/// graph) or a linear (ordered graph) order. Edge set is kept sorted and
/// duplicate-free; construction validates endpoints.
struct Graph {
    OrderKind kind = OrderKind::Cyclic;
    int n = 0;
    std::vector<Edge> edges;

    static Graph cgg(int n, std::vector<Edge> edges);
    static Graph ordered(int n, std::vector<Edge> edges);

    bool is_cyclic() const { return kind == OrderKind::Cyclic; }
    int edge_count() const { return static_cast<int>(edges.size()); }
    bool has_edge(int u, int v) const;

    bool operator==(const Graph&) const = default;
};

Graph complete_graph(int n, OrderKind kind = OrderKind::Cyclic);

// Plane cycle C_k: vertices 0..k-1, edges between cyclically consecutive ones.
Graph plane_cycle(int k);

Graph ordered_path(int k);

/// Length of edge e in the complete host order of G: one less than the
/// smallest interval containing both endpoints. Cyclic: min(d, n-d);
/// linear: |i-j|. Throws precondition_error on degenerate pairs.
int edge_length(const Graph& g, Edge e);

int edge_length(OrderKind kind, int n, int u, int v);

/// Exact average edge length of the complete graph on n vertices under the
/// given order, as a rational over all C(n,2) edges.
Rat average_edge_length(int n, bool cyclic);

/// Contiguous interval partition of [0,n) under a cyclic or linear order.
/// Cyclic: `starts` are the interval start positions (sorted, first interval
/// begins at starts[0] and wraps). Linear: starts[0] must be 0.
struct IntervalPartition {
    OrderKind kind = OrderKind::Cyclic;
    int n = 0;
    std::vector<int> starts;

    int parts() const { return static_cast<int>(starts.size()); }
    // Part index of vertex v.
    int part_of(int v) const;
    // Size of part i.
    int part_size(int i) const;
    // Vertices of part i in order.
    std::vector<int> part_vertices(int i) const;
};

IntervalPartition make_partition(OrderKind kind, int n, std::vector<int> starts);

// True iff no edge of g has both endpoints in one part of p.
bool partition_valid(const Graph& g, const IntervalPartition& p);

// Length of the pair {part i, part j} in the induced order on the parts.
int part_pair_length(const IntervalPartition& p, int i, int j);

} // namespace cggpack
