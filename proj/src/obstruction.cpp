#include "cggpack/obstruction.hpp"

#include "cggpack/embed.hpp"
#include "cggpack/error.hpp"

#include <algorithm>
#include <functional>

namespace cggpack {

LengthProfile length_profile(int n) {
    if (n < 3) throw precondition_error("length profile needs n >= 3");
    LengthProfile p;
    p.n = n;
    p.total_length = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            int l = edge_length(OrderKind::Cyclic, n, u, v);
            p.counts[l] += 1;
            p.total_length += l;
        }
    return p;
}

namespace {

bool is_plane_cycle(const Graph& g) {
    if (!g.is_cyclic() || g.n < 3 || g.edge_count() != g.n) return false;
    for (int i = 0; i < g.n; ++i)
        if (!g.has_edge(i, (i + 1) % g.n)) return false;
    return true;
}

// Max over anchored placements (copy contains host vertex 0; rotations
// preserve lengths, so nothing is lost) of the summed pattern-edge lengths.
BigInt brute_force_max_total(const Graph& g, int n) {
    const int k = g.n;
    std::vector<int> pos(k);
    pos[0] = 0;
    long long best = -1;
    std::function<void(int)> rec = [&](int idx) {
        if (idx == k) {
            // evaluate all cyclic alignments of the pattern onto pos
            for (int r = 0; r < k; ++r) {
                long long total = 0;
                bool ok = true;
                for (const auto& [u, v] : g.edges) {
                    int a = pos[(u + r) % k], b = pos[(v + r) % k];
                    if (a == b) {
                        ok = false;
                        break;
                    }
                    total += edge_length(OrderKind::Cyclic, n, a, b);
                }
                if (ok) best = std::max(best, total);
            }
            return;
        }
        for (int v = pos[idx - 1] + 1; v <= n - (k - idx); ++v) {
            pos[idx] = v;
            rec(idx + 1);
        }
    };
    if (k <= n) rec(1);
    if (best < 0) throw precondition_error("pattern does not fit in the host");
    return BigInt(best);
}

} // namespace

MaxTotalLength max_copy_total_length(const Graph& g, int n) {
    if (!g.is_cyclic()) throw precondition_error("total-length obstruction is for cggs");
    if (g.n > n) throw precondition_error("pattern does not fit in the host");
    if (g.n == 2 && g.edge_count() == 1) return {BigInt(n / 2), TotalLengthMode::Exact};
    if (g.n <= 8 && n <= 60) return {brute_force_max_total(g, n), TotalLengthMode::Exact};
    if (is_plane_cycle(g) && n >= 2 * g.n) {
        // cycle edges are the consecutive gaps; total length <= sum of gaps = n,
        // attained by near-equal gaps (all at most n/2)
        return {BigInt(n), TotalLengthMode::CycleBound};
    }
    throw precondition_error(
        "exact mode needs |V| <= 8 and n <= 60; larger hosts are only supported for plane cycles");
}

CoverageBound coverage_upper_bound(const Graph& g, int n) {
    if (n % 2 == 0)
        throw precondition_error("coverage bound needs odd n (uniform count per length)");
    if (g.edge_count() == 0) throw precondition_error("coverage bound of an edgeless pattern");
    CoverageBound cb;
    cb.n = n;
    auto mt = max_copy_total_length(g, n);
    cb.max_total_length = mt.value;
    cb.mode = mt.mode;

    // Largest M such that r * T(M) <= M * L, where T(M) is the total length of
    // the M shortest edges. T is convex in M, so the condition is a prefix.
    const long long r = g.edge_count();
    const int half = (n - 1) / 2;
    const long long per_length = n; // odd n: every length has exactly n edges
    long long m_edges = 0;
    BigInt t = 0;
    cb.best_edges = 0;
    for (int l = 1; l <= half; ++l) {
        // add edges of length l one block at a time, then locate the largest
        // prefix of the block still satisfying the mass inequality
        BigInt t_full = t + BigInt(l) * per_length;
        long long m_full = m_edges + per_length;
        if (r * t_full <= cb.max_total_length * m_full) {
            t = t_full;
            m_edges = m_full;
            cb.best_edges = m_edges;
            continue;
        }
        // partial block: largest c in [0, per_length) with r(T + l c) <= L (M + c)
        long long lo = 0, hi = per_length - 1;
        while (lo <= hi) {
            long long mid = (lo + hi) / 2;
            if (r * (t + BigInt(l) * mid) <= cb.max_total_length * (m_edges + mid))
                lo = mid + 1;
            else
                hi = mid - 1;
        }
        cb.best_edges = m_edges + hi;
        break;
    }
    cb.bound = Rat(BigInt(cb.best_edges), binomial2(n));
    return cb;
}

} // namespace cggpack
