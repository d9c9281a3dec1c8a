#include "cggpack/hypergraph.hpp"

#include "cggpack/blowup.hpp"
#include "cggpack/error.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <set>

namespace cggpack {

namespace {

// floor(p * 2^64) for p in [0,1]
std::uint64_t bernoulli_threshold(const Rat& p) {
    if (p >= 1) return ~0ULL;
    if (p <= 0) return 0;
    BigInt scaled = (numerator(p) << 64) / denominator(p);
    return scaled.convert_to<std::uint64_t>();
}

} // namespace

PhiOnHost phi_from_solution(const CompressedMatrix& m, const std::map<RotationClass, Rat>& x) {
    if (!verify_solution(m, x))
        throw precondition_error("phi needs an exact solution of the compressed system");
    PhiOnHost phi;
    phi.max_value = 0;
    for (const auto& [cls, v] : x) phi.max_value = std::max(phi.max_value, v);
    auto table = std::make_shared<std::map<RotationClass, Rat>>(x);
    int mm = m.m();
    phi.value = [table, mm](const std::vector<int>& subset, int) -> Rat {
        auto cls = make_rotation_class(gaps_of_positions(subset, mm));
        auto it = table->find(cls);
        return it == table->end() ? Rat(0) : it->second;
    };
    phi.verified = true;
    return phi;
}

PhiOnHost phi_rotation_scaling(const WeightedCgg& w, const Graph& h) {
    const int k = w.k();
    if (h.n != k) throw precondition_error("scaling phi hosts W on all vertices of H");
    Rat sigma = 0;
    // matching weight sum: every edge of H carries weight 1 and receives, over
    // the k rotations, the total W-weight of its length class
    for (int u = 0; u < k; ++u)
        for (int v = u + 1; v < k; ++v) sigma += w.weight(u, v);
    // per-edge check of the packing equation over H with phi = 1/sigma per rotation
    for (const auto& [u, v] : h.edges) {
        Rat sum = 0;
        for (int r = 0; r < k; ++r)
            sum += w.weight(((u - r) % k + k) % k, ((v - r) % k + k) % k);
        if (sum != sigma)
            throw precondition_error("host is not length-uniform enough for the scaling phi");
    }
    // zero-weight pairs must not be forced onto non-edges of H
    for (int u = 0; u < k; ++u)
        for (int v = u + 1; v < k; ++v) {
            if (h.has_edge(u, v)) continue;
            for (int r = 0; r < k; ++r) {
                if (w.weight(((u - r) % k + k) % k, ((v - r) % k + k) % k) != 0)
                    throw precondition_error("W places weight on a non-edge of H");
            }
        }
    if (sigma <= 0) throw precondition_error("scaling phi needs positive total weight");
    PhiOnHost phi;
    phi.max_value = Rat(1) / sigma;
    Rat val = phi.max_value;
    phi.value = [val](const std::vector<int>&, int) { return val; };
    phi.verified = true;
    return phi;
}

CopyHypergraph build_copy_hypergraph(const Graph& g, const IntervalPartition& p, const Graph& h,
                                     const PhiOnHost& phi, int t, std::uint64_t seed,
                                     const HypergraphOptions& opt) {
    if (!phi.verified) throw precondition_error("phi must be a verified fractional packing");
    if (!partition_valid(g, p)) throw precondition_error("invalid pattern partition");
    if (t < 1) throw precondition_error("blowup factor must be positive");
    if (phi.max_value == 0) {
        CopyHypergraph empty;
        empty.host = blowup(h, t);
        empty.pattern = g;
        empty.r = g.edge_count();
        return empty;
    }

    const int k = p.parts();
    CopyHypergraph hg;
    hg.host = blowup(h, t);
    hg.pattern = g;
    hg.r = g.edge_count();
    hg.phi_max = phi.max_value;

    // pattern vertices by part, in cyclic rank order
    std::vector<std::vector<int>> part_vertices(k);
    std::vector<int> part_size(k);
    for (int i = 0; i < k; ++i) {
        part_vertices[i] = p.part_vertices(i);
        part_size[i] = static_cast<int>(part_vertices[i].size());
        hg.max_part_size = std::max(hg.max_part_size, part_size[i]);
    }
    const WeightedCgg w = weighted_representation(g, p);

    const int delta_cap = std::max(1, static_cast<int>(std::floor(std::log(std::max(2, t)))));
    hg.delta_max = hg.max_part_size >= 2 ? delta_cap : 1;
    if (t < hg.max_part_size) return hg; // no placement fits; empty hypergraph

    Rng rng(seed);
    std::set<std::vector<int>> seen; // dedup of coincident sub-cggs
    std::vector<int> subset;
    std::vector<int> offset(k), map(g.n);

    auto emit_placements = [&](const std::vector<int>& hosts) {
        for (int r = 0; r < k; ++r) {
            // alignment admissible iff every positive cross-weight lands on an H-edge
            bool ok = true;
            for (int i = 0; i < k && ok; ++i)
                for (int j = i + 1; j < k && ok; ++j) {
                    if (w.weight(i, j) == 0) continue;
                    if (!h.has_edge(hosts[(i + r) % k], hosts[(j + r) % k])) ok = false;
                }
            if (!ok) continue;
            Rat value = phi.value(hosts, r);
            if (value == 0) continue;
            if (value > phi.max_value)
                throw verification_error("phi exceeds its declared maximum");
            const std::uint64_t threshold = bernoulli_threshold(value / phi.max_value);
            const bool always = value == phi.max_value;

            for (int delta = 1; delta <= hg.delta_max; ++delta) {
                // offset ranges per part
                bool fits = true;
                for (int i = 0; i < k; ++i)
                    if (t - (part_size[i] - 1) * delta < 1) fits = false;
                if (!fits) continue;
                std::fill(offset.begin(), offset.end(), 0);
                for (;;) {
                    // materialize the vertex map
                    for (int i = 0; i < k; ++i) {
                        int base = hosts[(i + r) % k] * t;
                        for (int j = 0; j < part_size[i]; ++j)
                            map[part_vertices[i][j]] = base + offset[i] + j * delta;
                    }
                    // sub-cgg identity: sorted vertices plus sorted edge image.
                    // Alignments of a rotationally symmetric pattern regenerate
                    // the same sub-cgg; it gets exactly one inclusion draw.
                    std::vector<int> key = map;
                    std::sort(key.begin(), key.end());
                    std::vector<Edge> img;
                    img.reserve(g.edges.size());
                    for (const auto& [u, v] : g.edges) {
                        int a = map[u], b = map[v];
                        img.emplace_back(std::min(a, b), std::max(a, b));
                    }
                    std::sort(img.begin(), img.end());
                    for (const auto& [a, b] : img) {
                        key.push_back(a);
                        key.push_back(b);
                    }
                    if (seen.insert(std::move(key)).second) {
                        ++hg.candidates;
                        if (always || rng.bernoulli_u64(threshold)) {
                            hg.copies.push_back(map);
                            if (static_cast<long long>(hg.copies.size()) > opt.max_hyperedges)
                                throw precondition_error(
                                    "hypergraph exceeds the materialization cap");
                        }
                    }
                    // advance offsets odometer-style
                    int i = 0;
                    for (; i < k; ++i) {
                        if (++offset[i] <= t - (part_size[i] - 1) * delta - 1) break;
                        offset[i] = 0;
                    }
                    if (i == k) break;
                }
            }
        }
    };

    std::function<void()> rec = [&]() {
        if (static_cast<int>(subset.size()) == k) {
            emit_placements(subset);
            return;
        }
        int from = subset.empty() ? 0 : subset.back() + 1;
        int room = k - static_cast<int>(subset.size());
        for (int v = from; v <= h.n - room; ++v) {
            subset.push_back(v);
            rec();
            subset.pop_back();
        }
    };
    if (k <= h.n) rec();
    return hg;
}

NibbleResult nibble_select(long long n_vertices, const std::vector<std::vector<long long>>& edges,
                           double epsilon, std::uint64_t seed) {
    NibbleResult res;
    if (edges.empty()) return res;
    std::size_t r = edges[0].size();
    const double beta = 0.05 * std::max(0.2, std::min(1.0, epsilon * 10));
    res.bite_size =
        std::max<long long>(1, static_cast<long long>(beta * n_vertices / std::max<std::size_t>(1, r)));

    std::vector<long long> order(edges.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<long long>(i);
    Rng rng(seed);
    for (std::size_t i = order.size(); i > 1; --i)
        std::swap(order[i - 1], order[rng.below(i)]);

    std::vector<bool> used(n_vertices, false);
    long long in_round = 0;
    for (long long idx : order) {
        bool free = true;
        for (long long v : edges[idx])
            if (used[v]) {
                free = false;
                break;
            }
        if (free) {
            for (long long v : edges[idx]) used[v] = true;
            res.selected.push_back(idx);
        }
        if (++in_round >= res.bite_size) {
            in_round = 0;
            ++res.rounds;
        }
    }
    if (in_round > 0) ++res.rounds;
    return res;
}

NibbleResult nibble_matching(const CopyHypergraph& hg, double epsilon, std::uint64_t seed) {
    std::vector<std::vector<long long>> edges(hg.copies.size());
    for (std::size_t i = 0; i < hg.copies.size(); ++i) {
        const auto& map = hg.copies[i];
        edges[i].reserve(hg.pattern.edges.size());
        for (const auto& [u, v] : hg.pattern.edges)
            edges[i].push_back(edge_id(hg.host.n, map[u], map[v]));
    }
    return nibble_select(static_cast<long long>(hg.host.n) * (hg.host.n - 1) / 2, edges, epsilon,
                         seed);
}

Packing packing_from_selection(const CopyHypergraph& hg, const std::vector<long long>& selected) {
    Packing p{hg.host, hg.pattern, {}};
    p.flat.reserve(selected.size() * hg.pattern.n);
    for (long long idx : selected)
        p.flat.insert(p.flat.end(), hg.copies[idx].begin(), hg.copies[idx].end());
    return p;
}

} // namespace cggpack
