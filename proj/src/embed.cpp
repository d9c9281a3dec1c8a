#include "cggpack/embed.hpp"

#include "cggpack/error.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace cggpack {

namespace {

bool cyclically_monotone(const std::vector<int>& map, int n) {
    // offsets from map[0] must be strictly increasing mod n
    int prev = 0;
    for (std::size_t i = 1; i < map.size(); ++i) {
        int off = map[i] - map[0];
        if (off < 0) off += n;
        if (off <= prev) return false;
        prev = off;
    }
    return true;
}

} // namespace

bool embedding_valid(const Graph& pattern, const Graph& host, const Embedding& e) {
    if (pattern.kind != host.kind) return false;
    if (static_cast<int>(e.map.size()) != pattern.n) return false;
    std::set<int> distinct;
    for (int v : e.map) {
        if (v < 0 || v >= host.n) return false;
        if (!distinct.insert(v).second) return false;
    }
    if (pattern.kind == OrderKind::Linear) {
        if (!std::is_sorted(e.map.begin(), e.map.end())) return false;
    } else {
        if (!cyclically_monotone(e.map, host.n)) return false;
    }
    for (const auto& [u, v] : pattern.edges)
        if (!host.has_edge(e.map[u], e.map[v])) return false;
    return true;
}

std::vector<Edge> embedding_edge_image(const Graph& pattern, const Embedding& e) {
    std::vector<Edge> img;
    img.reserve(pattern.edges.size());
    for (const auto& [u, v] : pattern.edges) {
        int a = e.map[u], b = e.map[v];
        if (a > b) std::swap(a, b);
        img.emplace_back(a, b);
    }
    std::sort(img.begin(), img.end());
    return img;
}

namespace {

// Visits every order-preserving placement: a sorted host subset of size k,
// plus for cggs the k cyclic alignments of pattern vertex 0.
void for_each_placement(const Graph& pattern, const Graph& host,
                        const std::function<bool(const Embedding&)>& accept) {
    const int k = pattern.n;
    if (k > host.n || k == 0) return;
    std::vector<int> subset;
    Embedding emb;
    emb.map.resize(k);
    std::function<bool()> rec = [&]() -> bool {
        if (static_cast<int>(subset.size()) == k) {
            int rotations = pattern.kind == OrderKind::Cyclic ? k : 1;
            for (int r = 0; r < rotations; ++r) {
                for (int i = 0; i < k; ++i) emb.map[i] = subset[(i + r) % k];
                bool ok = true;
                for (const auto& [u, v] : pattern.edges)
                    if (!host.has_edge(emb.map[u], emb.map[v])) {
                        ok = false;
                        break;
                    }
                if (ok && accept(emb)) return true;
            }
            return false;
        }
        int from = subset.empty() ? 0 : subset.back() + 1;
        int room = k - static_cast<int>(subset.size());
        for (int v = from; v <= host.n - room; ++v) {
            subset.push_back(v);
            if (rec()) return true;
            subset.pop_back();
        }
        return false;
    };
    rec();
}

} // namespace

std::vector<Embedding> enumerate_embeddings(const Graph& pattern, const Graph& host,
                                            std::optional<std::int64_t> limit) {
    if (pattern.kind != host.kind)
        throw precondition_error("pattern and host carry different order kinds");
    std::vector<Embedding> out;
    // Distinct sub-copies only: dedup alignments whose vertex and edge images
    // coincide (happens exactly when the pattern has a rotational symmetry).
    std::set<std::pair<std::vector<int>, std::vector<Edge>>> seen;
    for_each_placement(pattern, host, [&](const Embedding& e) {
        std::vector<int> verts = e.map;
        std::sort(verts.begin(), verts.end());
        auto key = std::make_pair(std::move(verts), embedding_edge_image(pattern, e));
        if (!seen.insert(std::move(key)).second) return false;
        out.push_back(e);
        return limit && static_cast<std::int64_t>(out.size()) >= *limit;
    });
    return out;
}

std::int64_t count_embedding_maps(const Graph& pattern, const Graph& host) {
    std::int64_t count = 0;
    for_each_placement(pattern, host, [&](const Embedding&) {
        ++count;
        return false;
    });
    return count;
}

} // namespace cggpack
