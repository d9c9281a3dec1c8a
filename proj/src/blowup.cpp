#include "cggpack/blowup.hpp"

#include "cggpack/error.hpp"

namespace cggpack {

Graph blowup(const Graph& h, int t) {
    if (t < 1) throw precondition_error("blowup factor must be positive");
    std::vector<Edge> edges;
    edges.reserve(h.edges.size() * static_cast<std::size_t>(t) * t);
    for (const auto& [u, v] : h.edges)
        for (int a = 0; a < t; ++a)
            for (int b = 0; b < t; ++b) edges.emplace_back(u * t + a, v * t + b);
    Graph g;
    g.kind = h.kind;
    g.n = h.n * t;
    g.edges = std::move(edges);
    // re-normalize through the validating constructor
    return g.is_cyclic() ? Graph::cgg(g.n, std::move(g.edges))
                         : Graph::ordered(g.n, std::move(g.edges));
}

Graph irregular_blowup_k3(int e12, int e13, int e23, int t) {
    if (e12 < 1 || e13 < 1 || e23 < 1) throw precondition_error("cross-edge counts must be positive");
    if (t < 1) throw precondition_error("blowup factor must be positive");
    const int s1 = e12 * e13 * t, s2 = e12 * e23 * t, s3 = e13 * e23 * t;
    const int n = s1 + s2 + s3;
    std::vector<Edge> edges;
    auto bundle = [&](int lo1, int hi1, int lo2, int hi2) {
        for (int a = lo1; a < hi1; ++a)
            for (int b = lo2; b < hi2; ++b) edges.emplace_back(a, b);
    };
    bundle(0, s1, s1, s1 + s2);
    bundle(0, s1, s1 + s2, n);
    bundle(s1, s1 + s2, s1 + s2, n);
    return Graph::ordered(n, std::move(edges));
}

} // namespace cggpack
