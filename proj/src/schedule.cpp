#include "cggpack/schedule.hpp"

#include "cggpack/error.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <numeric>

namespace cggpack {

ScheduleReport rotation_schedule_packing(const WeightedCgg& w,
                                         const std::map<RotationClass, Rat>& x, int n) {
    if (n % 2 == 0) throw precondition_error("rotation schedule needs odd n");
    auto by_length = w.length_uniform();
    if (!by_length) throw precondition_error("rotation schedule needs length-uniform weights");
    const int k = w.k();
    for (const auto& wl : *by_length)
        if (wl != 0 && wl != 1)
            throw precondition_error("rotation schedule needs 0/1 weights per length");

    // plane pattern: pairs at weight-1 lengths
    std::vector<Edge> pat_edges;
    for (int u = 0; u < k; ++u)
        for (int v = u + 1; v < k; ++v)
            if (w.weight(u, v) == 1) pat_edges.emplace_back(u, v);
    Graph pattern = Graph::cgg(k, pat_edges);
    if (pattern.edge_count() == 0) throw precondition_error("pattern has no edges");

    // exact sub-solution check: per length, sum of x * multiplicity <= 1
    const int rows = (n - 1) / 2;
    std::vector<Rat> row_sum(rows, Rat(0));
    for (const auto& [cls, val] : x) {
        if (val < 0) throw precondition_error("rotation schedule needs x >= 0");
        if (cls.m() != n) throw precondition_error("gap vector does not sum to the host size");
        if (cls.minimal_period() != cls.k())
            throw precondition_error("periodic gap classes are not schedulable per length");
        auto pos = positions_of_gaps(cls.gaps, n, 0);
        std::sort(pos.begin(), pos.end());
        for (const auto& [u, v2] : pat_edges) {
            int d = pos[v2] - pos[u];
            row_sum[std::min(d, n - d) - 1] += val;
        }
    }
    ScheduleReport rep;
    rep.residual_rows = 0;
    for (const auto& s : row_sum) {
        if (s > 1)
            throw precondition_error("x oversubscribes a length row: Mx <= 1 fails");
        rep.residual_rows += Rat(1) - s;
    }

    rep.packing = Packing{complete_graph(n, OrderKind::Cyclic), pattern, {}};
    rep.used_per_length.assign(rows, 0);
    std::vector<bool> used(static_cast<std::size_t>(n) * (n - 1) / 2, false);

    std::vector<int> map(k);
    for (const auto& [cls, val] : x) {
        // floor(x * n) offsets for this class
        const Rat scaled = val * n;
        BigInt quota_big = numerator(scaled) / denominator(scaled);
        long long quota = quota_big.convert_to<long long>();
        quota = std::min<long long>(quota, n);
        rep.quota += quota;
        long long taken = 0;
        for (int off = 0; off < n && taken < quota; ++off) {
            auto pos = positions_of_gaps(cls.gaps, n, off);
            std::sort(pos.begin(), pos.end());
            bool free = true;
            for (const auto& [u, v2] : pat_edges)
                if (used[edge_id(n, pos[u], pos[v2])]) {
                    free = false;
                    break;
                }
            if (!free) continue;
            for (const auto& [u, v2] : pat_edges) {
                used[edge_id(n, pos[u], pos[v2])] = true;
                int d = pos[v2] - pos[u];
                rep.used_per_length[std::min(d, n - d) - 1] += 1;
            }
            for (int i = 0; i < k; ++i) map[i] = pos[i];
            rep.packing.flat.insert(rep.packing.flat.end(), map.begin(), map.end());
            ++taken;
        }
        rep.accepted += taken;
    }
    return rep;
}

namespace {

// Partition `values` (sorted ascending) into quadruples each summing to
// `target`; small backtracking over the pair completing (smallest, largest).
bool partition_quads(std::vector<int> values, int target,
                     std::vector<std::array<int, 4>>& out) {
    if (values.empty()) return true;
    if (values.size() % 4 != 0) return false;
    int a = values.front();
    // try partners d from the top; b,c found by two-pointer on the rest
    for (std::size_t di = values.size() - 1; di >= 2; --di) {
        int d = values[di];
        int need = target - a - d;
        if (need < 0) continue;
        std::size_t lo = 1, hi = di - 1;
        while (lo < hi) {
            int s = values[lo] + values[hi];
            if (s == need) {
                std::array<int, 4> quad{a, values[lo], values[hi], d};
                std::vector<int> rest;
                rest.reserve(values.size() - 4);
                for (std::size_t i = 0; i < values.size(); ++i)
                    if (i != 0 && i != lo && i != hi && i != di) rest.push_back(values[i]);
                out.push_back(quad);
                if (partition_quads(std::move(rest), target, out)) return true;
                out.pop_back();
                ++lo; // try a different middle pair before giving up on d
            } else if (s < need) {
                ++lo;
            } else {
                --hi;
            }
        }
        if (di == 2) break;
    }
    return false;
}

} // namespace

std::map<RotationClass, Rat> c4_quad_cover(int n) {
    if (n % 2 == 0 || n < 17) throw precondition_error("quad cover needs odd n >= 17");
    const int h = (n - 1) / 2;
    const long long total = static_cast<long long>(h) * (h + 1) / 2;

    for (int q = h / 4; q >= 1; --q) {
        const int excl_count = h - 4 * q;
        const long long excl_sum = total - static_cast<long long>(q) * n;
        if (excl_sum < 0) continue;
        // smallest/largest achievable sums of excl_count distinct values in [1,h]
        long long min_sum = static_cast<long long>(excl_count) * (excl_count + 1) / 2;
        long long max_sum =
            static_cast<long long>(excl_count) * (2 * h - excl_count + 1) / 2;
        if (excl_sum < min_sum || excl_sum > max_sum) continue;

        // deterministic exclusion set: greedy from the top
        std::vector<bool> excluded(h + 1, false);
        long long remaining = excl_sum;
        int needed = excl_count;
        for (int v = h; v >= 1 && needed > 0; --v) {
            long long floor_rest = static_cast<long long>(needed - 1) * needed / 2;
            if (remaining - v >= floor_rest && v <= remaining) {
                excluded[v] = true;
                remaining -= v;
                --needed;
            }
        }
        if (needed != 0 || remaining != 0) continue;

        std::vector<int> values;
        for (int v = 1; v <= h; ++v)
            if (!excluded[v]) values.push_back(v);
        std::vector<std::array<int, 4>> quads;
        if (!partition_quads(values, n, quads)) continue;

        std::map<RotationClass, Rat> x;
        for (const auto& quad : quads) {
            std::vector<int> gaps(quad.begin(), quad.end());
            x.emplace(make_rotation_class(std::move(gaps)), Rat(1));
        }
        return x;
    }
    throw verification_error("no quad cover found; host too small");
}

} // namespace cggpack
