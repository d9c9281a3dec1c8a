#include "cggpack/graph.hpp"

#include "cggpack/error.hpp"

#include <algorithm>
#include <string>

namespace cggpack {

namespace {

Graph make_graph(OrderKind kind, int n, std::vector<Edge> edges) {
    if (n < 0) throw precondition_error("negative vertex count");
    for (auto& [u, v] : edges) {
        if (u > v) std::swap(u, v);
        if (u == v) throw precondition_error("self-loop at vertex " + std::to_string(u));
        if (u < 0 || v >= n) throw precondition_error("edge endpoint out of range");
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw precondition_error("duplicate edge");
    Graph g;
    g.kind = kind;
    g.n = n;
    g.edges = std::move(edges);
    return g;
}

} // namespace

Graph Graph::cgg(int n, std::vector<Edge> edges) {
    return make_graph(OrderKind::Cyclic, n, std::move(edges));
}

Graph Graph::ordered(int n, std::vector<Edge> edges) {
    return make_graph(OrderKind::Linear, n, std::move(edges));
}

bool Graph::has_edge(int u, int v) const {
    if (u > v) std::swap(u, v);
    return std::binary_search(edges.begin(), edges.end(), Edge{u, v});
}

Graph complete_graph(int n, OrderKind kind) {
    std::vector<Edge> e;
    e.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
    return make_graph(kind, n, std::move(e));
}

Graph plane_cycle(int k) {
    if (k < 3) throw precondition_error("plane cycle needs at least 3 vertices");
    std::vector<Edge> e;
    for (int i = 0; i < k; ++i) e.emplace_back(i, (i + 1) % k);
    return Graph::cgg(k, std::move(e));
}

Graph ordered_path(int k) {
    if (k < 2) throw precondition_error("path needs at least 2 vertices");
    std::vector<Edge> e;
    for (int i = 0; i + 1 < k; ++i) e.emplace_back(i, i + 1);
    return Graph::ordered(k, std::move(e));
}

int edge_length(OrderKind kind, int n, int u, int v) {
    if (u == v) throw precondition_error("edge with identical endpoints");
    if (u < 0 || v < 0 || u >= n || v >= n) throw precondition_error("edge endpoint out of range");
    int d = std::abs(u - v);
    return kind == OrderKind::Cyclic ? std::min(d, n - d) : d;
}

int edge_length(const Graph& g, Edge e) { return edge_length(g.kind, g.n, e.first, e.second); }

Rat average_edge_length(int n, bool cyclic) {
    if (n < 3) throw precondition_error("average length needs n >= 3");
    BigInt total = 0;
    OrderKind kind = cyclic ? OrderKind::Cyclic : OrderKind::Linear;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) total += edge_length(kind, n, u, v);
    return Rat(total, binomial2(n));
}

int IntervalPartition::part_of(int v) const {
    int k = parts();
    if (kind == OrderKind::Linear) {
        int i = static_cast<int>(std::upper_bound(starts.begin(), starts.end(), v) - starts.begin());
        return i - 1;
    }
    // cyclic: part i spans [starts[i], starts[i+1]) around the circle
    auto it = std::upper_bound(starts.begin(), starts.end(), v);
    if (it == starts.begin() || it == starts.end()) return k - 1; // wraps through the last start
    return static_cast<int>(it - starts.begin()) - 1;
}

int IntervalPartition::part_size(int i) const {
    int k = parts();
    int from = starts[i];
    int to = (i + 1 < k) ? starts[i + 1] : (kind == OrderKind::Linear ? n : starts[0] + n);
    return to - from;
}

std::vector<int> IntervalPartition::part_vertices(int i) const {
    std::vector<int> out;
    int sz = part_size(i);
    out.reserve(sz);
    for (int j = 0; j < sz; ++j) out.push_back((starts[i] + j) % n);
    return out;
}

IntervalPartition make_partition(OrderKind kind, int n, std::vector<int> starts) {
    if (n <= 0) throw precondition_error("partition of empty vertex set");
    if (starts.empty()) throw precondition_error("partition needs at least one part");
    if (!std::is_sorted(starts.begin(), starts.end()) ||
        std::adjacent_find(starts.begin(), starts.end()) != starts.end())
        throw precondition_error("partition starts must be strictly increasing");
    if (starts.front() < 0 || starts.back() >= n)
        throw precondition_error("partition start out of range");
    if (kind == OrderKind::Linear && starts.front() != 0)
        throw precondition_error("linear partition must start at 0");
    if (static_cast<int>(starts.size()) > n)
        throw precondition_error("more parts than vertices");
    IntervalPartition p;
    p.kind = kind;
    p.n = n;
    p.starts = std::move(starts);
    return p;
}

bool partition_valid(const Graph& g, const IntervalPartition& p) {
    if (p.n != g.n || p.kind != g.kind) return false;
    for (const auto& [u, v] : g.edges)
        if (p.part_of(u) == p.part_of(v)) return false;
    return true;
}

int part_pair_length(const IntervalPartition& p, int i, int j) {
    return edge_length(p.kind, p.parts(), i, j);
}

} // namespace cggpack
