#include "cggpack/greedy.hpp"

#include "cggpack/error.hpp"

#include <algorithm>
#include <array>
#include <functional>

namespace cggpack {

namespace {

// C(n, k) clamped to a cap so huge spaces short-circuit cheaply.
long long placement_space(int n, int k, long long cap) {
    long long acc = 1;
    for (int i = 1; i <= k; ++i) {
        acc = acc * (n - k + i) / i;
        if (acc > cap) return cap + 1;
    }
    return acc * (k > 0 ? k : 1); // subsets times cyclic alignments
}

struct State {
    const Graph& pattern;
    const Graph& host;
    std::vector<bool> used;
    Packing packing;

    bool copy_free(const std::vector<int>& map) const {
        for (const auto& [u, v] : pattern.edges) {
            if (!host.has_edge(map[u], map[v])) return false;
            if (used[edge_id(host.n, map[u], map[v])]) return false;
        }
        return true;
    }

    void commit(const std::vector<int>& map) {
        for (const auto& [u, v] : pattern.edges) used[edge_id(host.n, map[u], map[v])] = true;
        packing.flat.insert(packing.flat.end(), map.begin(), map.end());
    }
};

GreedyResult run_once(const Graph& pattern, const Graph& host, std::uint64_t seed,
                      const GreedyOptions& opt) {
    GreedyResult res;
    res.seed = seed;
    State st{pattern, host,
             std::vector<bool>(static_cast<std::size_t>(host.n) * (host.n - 1) / 2, false),
             Packing{host, pattern, {}}};
    const int k = pattern.n;
    if (k > host.n || k == 0 || pattern.edge_count() == 0) {
        // nothing to pack (or every placement is vacuously free)
        res.packing = std::move(st.packing);
        return res;
    }

    Rng rng(seed);
    std::vector<int> subset(k), map(k);
    long long failures = 0;
    while (failures < opt.failure_budget) {
        ++res.samples;
        // sorted k-subset via partial Fisher-Yates over [0, n)
        // (k is tiny; resample on collision)
        for (int i = 0; i < k; ++i) {
            for (;;) {
                int v = rng.below_int(host.n);
                if (std::find(subset.begin(), subset.begin() + i, v) == subset.begin() + i) {
                    subset[i] = v;
                    break;
                }
            }
        }
        std::sort(subset.begin(), subset.end());
        int r = pattern.is_cyclic() ? rng.below_int(k) : 0;
        for (int i = 0; i < k; ++i) map[i] = subset[(i + r) % k];
        if (st.copy_free(map)) {
            st.commit(map);
            failures = 0;
        } else {
            ++failures;
        }
    }

    if (placement_space(host.n, k, opt.scan_space_cap) <= opt.scan_space_cap) {
        // deterministic sweep over every placement; guarantees maximality
        std::vector<int> pick;
        std::function<void()> rec = [&]() {
            if (static_cast<int>(pick.size()) == k) {
                int rotations = pattern.is_cyclic() ? k : 1;
                for (int r = 0; r < rotations; ++r) {
                    for (int i = 0; i < k; ++i) map[i] = pick[(i + r) % k];
                    if (st.copy_free(map)) st.commit(map);
                }
                return;
            }
            int from = pick.empty() ? 0 : pick.back() + 1;
            int room = k - static_cast<int>(pick.size());
            for (int v = from; v <= host.n - room; ++v) {
                pick.push_back(v);
                rec();
                pick.pop_back();
            }
        };
        rec();
        res.maximal_certified = true;
    }

    res.packing = std::move(st.packing);
    return res;
}

} // namespace

GreedyResult greedy_maximal_packing(const Graph& pattern, const Graph& host, std::uint64_t seed,
                                    const GreedyOptions& opt) {
    if (pattern.kind != host.kind)
        throw precondition_error("pattern and host carry different order kinds");
    Rng master(seed);
    GreedyResult best;
    bool have = false;
    for (int r = 0; r < std::max(1, opt.restarts); ++r) {
        std::uint64_t s = opt.restarts <= 1 ? seed : master.fork(r).next();
        auto cur = run_once(pattern, host, s, opt);
        if (!have || cur.packing.copy_count() > best.packing.copy_count()) {
            best = std::move(cur);
            have = true;
        }
    }
    return best;
}

Packing triangle_system_packing(int n, std::uint64_t seed, long long max_switches) {
    if (n < 3) throw precondition_error("triangle system needs n >= 3");
    if (max_switches <= 0) max_switches = 400LL * n * n;
    Rng rng(seed);

    // owner[edge] = index of the triangle covering it, -1 if free
    std::vector<long long> owner(static_cast<std::size_t>(n) * (n - 1) / 2, -1);
    std::vector<std::array<int, 3>> triangles;
    std::vector<bool> alive; // lazily deleted slots
    long long covered = 0;
    const long long target = static_cast<long long>(n) * (n - 1) / 2;

    auto place = [&](int a, int b, int c) {
        int t[3] = {a, b, c};
        std::sort(t, t + 3);
        long long idx = static_cast<long long>(triangles.size());
        triangles.push_back({t[0], t[1], t[2]});
        alive.push_back(true);
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j) {
                auto id = edge_id(n, t[i], t[j]);
                if (owner[id] == -1) ++covered;
                owner[id] = idx;
            }
    };
    auto remove = [&](long long idx) {
        alive[idx] = false;
        const auto& t = triangles[idx];
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j) {
                auto id = edge_id(n, t[i], t[j]);
                if (owner[id] == idx) {
                    owner[id] = -1;
                    --covered;
                }
            }
    };

    // uncovered pairs tracked as a shrinking work list, refreshed on demand
    auto pick_uncovered = [&]() -> std::pair<int, int> {
        for (int tries = 0; tries < 64; ++tries) {
            int u = rng.below_int(n), v = rng.below_int(n);
            if (u == v) continue;
            if (owner[edge_id(n, u, v)] == -1) return {std::min(u, v), std::max(u, v)};
        }
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (owner[edge_id(n, u, v)] == -1) return {u, v};
        return {-1, -1};
    };

    for (long long it = 0; it < max_switches && covered < target; ++it) {
        auto [a, b] = pick_uncovered();
        if (a < 0) break;
        int c = rng.below_int(n);
        if (c == a || c == b) continue;
        long long ta = owner[edge_id(n, a, c)];
        long long tb = owner[edge_id(n, b, c)];
        if (ta != -1 && tb != -1) continue; // displacing two never gains here
        if (ta != -1) remove(ta);
        if (tb != -1) remove(tb);
        place(a, b, c);
    }

    Packing p{complete_graph(n, OrderKind::Cyclic), complete_graph(3, OrderKind::Cyclic), {}};
    for (std::size_t i = 0; i < triangles.size(); ++i)
        if (alive[i])
            p.flat.insert(p.flat.end(), triangles[i].begin(), triangles[i].end());
    return p;
}

} // namespace cggpack
