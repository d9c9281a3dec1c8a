#include "cggpack/chromatic.hpp"

#include "cggpack/error.hpp"

#include <functional>
#include <optional>

namespace cggpack {

namespace {

// Visits k-subsets of [lo, n) in lexicographic order; stops when f returns true.
bool for_each_combination(int lo, int n, int k, std::vector<int>& buf,
                          const std::function<bool(const std::vector<int>&)>& f) {
    if (static_cast<int>(buf.size()) == k) return f(buf);
    int from = buf.empty() ? lo : buf.back() + 1;
    int room = k - static_cast<int>(buf.size());
    for (int v = from; v <= n - room; ++v) {
        buf.push_back(v);
        if (for_each_combination(lo, n, k, buf, f)) return true;
        buf.pop_back();
    }
    return false;
}

std::optional<IntervalPartition> find_valid_partition(const Graph& g, int k) {
    if (k < 1 || k > g.n) return std::nullopt;
    std::optional<IntervalPartition> found;
    auto try_starts = [&](std::vector<int> starts) {
        auto p = make_partition(g.kind, g.n, std::move(starts));
        if (partition_valid(g, p)) {
            found = std::move(p);
            return true;
        }
        return false;
    };
    std::vector<int> buf;
    if (g.kind == OrderKind::Linear) {
        buf.push_back(0);
        for_each_combination(1, g.n, k, buf,
                             [&](const std::vector<int>& s) { return try_starts(s); });
    } else {
        for_each_combination(0, g.n, k, buf,
                             [&](const std::vector<int>& s) { return try_starts(s); });
    }
    return found;
}

ChromaticResult chromatic_search(const Graph& g) {
    if (g.n == 0) throw precondition_error("chromatic number of empty graph");
    for (int k = 1; k <= g.n; ++k) {
        if (auto p = find_valid_partition(g, k)) {
            return {k, std::move(*p)};
        }
    }
    // singletons are always valid, so this is unreachable
    throw verification_error("chromatic search exhausted without witness");
}

} // namespace

ChromaticResult cyclic_chromatic_number(const Graph& g) {
    if (!g.is_cyclic()) throw precondition_error("cyclic chromatic number of an ordered graph");
    return chromatic_search(g);
}

ChromaticResult interval_chromatic_number(const Graph& g) {
    if (g.is_cyclic()) throw precondition_error("interval chromatic number of a cgg");
    return chromatic_search(g);
}

bool has_valid_partition(const Graph& g, int k) {
    return find_valid_partition(g, k).has_value();
}

} // namespace cggpack
