#include "cggpack/feasibility.hpp"

#include "cggpack/error.hpp"
#include "cggpack/parallel.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace cggpack {

namespace {

BigInt ceil_rat(const Rat& r) {
    BigInt num = numerator(r), den = denominator(r);
    if (num <= 0) throw precondition_error("ceiling of nonpositive witness quantity");
    return (num + den - 1) / den;
}

// Deterministic seed set for the restricted master: the lexicographic head,
// an even stride through the pool, and trapezoid/hex families matching the
// dual-analysis configurations, which tend to carry feasible supports.
std::vector<int> seed_columns(const CompressedMatrix& m) {
    const int pool = m.cols();
    const int rows = m.rows();
    std::set<int> picked;
    for (int j = 0; j < std::min(pool, rows); ++j) picked.insert(j);
    if (pool > 0) {
        int stride = std::max(1, pool / std::max(1, rows));
        for (int j = 0; j < pool; j += stride) picked.insert(j);
    }
    auto try_gaps = [&](std::vector<int> gaps) {
        for (int g : gaps)
            if (g < 1) return;
        if (auto idx = m.column_index(make_rotation_class(std::move(gaps)))) picked.insert(*idx);
    };
    const int mm = m.m(), k = m.k(), mp = (mm - 1) / 2;
    if (k == 4) {
        for (int i = 1; 4 * i <= mp; ++i)
            for (int i0 : {1, 2, 3, mp / 4, mp / 2}) {
                if (i0 < 1 || 2 * i + i0 >= mm) continue;
                try_gaps({i, i0, i, mm - 2 * i - i0});
            }
    } else if (k >= 6 && k % 2 == 0) {
        const int half = k / 2;
        for (int j = 1; 2 * half * j <= mp; ++j)
            for (int i = 1; i < half; ++i) {
                int rest = mm - i - (2 * half - 2) * j;
                if (rest < 1) continue;
                std::vector<int> gaps;
                for (int a = 0; a < half - 1; ++a) gaps.push_back(j);
                gaps.push_back(i);
                for (int a = 0; a < half - 1; ++a) gaps.push_back(j);
                gaps.push_back(rest);
                try_gaps(std::move(gaps));
            }
    }
    return {picked.begin(), picked.end()};
}

} // namespace

FeasibilityOutcome solve_feasibility(const CompressedMatrix& m) {
    FeasibilityOutcome out;
    Phase1Simplex simplex(m.rows());

    std::vector<int> active;               // pool index per structural column
    std::vector<bool> in_master(m.cols(), false);
    auto activate = [&](int pool_idx) {
        simplex.add_column(m.column_entries(pool_idx));
        active.push_back(pool_idx);
        in_master[pool_idx] = true;
    };
    for (int j : seed_columns(m)) activate(j);

    constexpr int kPerRound = 16;
    for (;;) {
        simplex.optimize();
        if (simplex.feasible()) break;
        // price the pool against the current dual; most negative first
        auto y = simplex.dual();
        const int chunks = 64;
        std::vector<std::vector<std::pair<Rat, int>>> found(chunks);
        parallel_chunks(m.cols(), chunks, [&](int c, long long b, long long e) {
            for (long long j = b; j < e; ++j) {
                if (in_master[j]) continue;
                Rat red = 0;
                for (const auto& [r, a] : m.column_entries(static_cast<int>(j))) red -= y[r] * a;
                if (red < 0) found[c].emplace_back(std::move(red), static_cast<int>(j));
            }
        });
        std::vector<std::pair<Rat, int>> improving;
        for (auto& chunk : found)
            for (auto& it : chunk) improving.push_back(std::move(it));
        ++out.pricing_rounds;
        if (improving.empty()) break;
        std::sort(improving.begin(), improving.end(),
                  [](const auto& a, const auto& b) {
                      return a.first != b.first ? a.first < b.first : a.second < b.second;
                  });
        for (int t = 0; t < std::min<int>(kPerRound, improving.size()); ++t)
            activate(improving[t].second);
    }

    out.pivots = simplex.pivot_count();
    out.columns_activated = static_cast<int>(active.size());
    if (simplex.feasible()) {
        out.feasible = true;
        auto xs = simplex.primal();
        for (std::size_t j = 0; j < xs.size(); ++j)
            if (xs[j] != 0) out.x.emplace(m.columns()[active[j]], std::move(xs[j]));
        if (!verify_solution(m, out.x))
            throw verification_error("feasible branch failed exact re-verification");
    } else {
        out.feasible = false;
        out.certificate = simplex.farkas();
        if (!verify_farkas(m, out.certificate))
            throw verification_error("certificate branch failed exact re-verification");
    }
    return out;
}

bool verify_solution(const CompressedMatrix& m, const std::map<RotationClass, Rat>& x) {
    std::vector<Rat> sum(m.rows(), Rat(0));
    for (const auto& [cls, v] : x) {
        if (v < 0) return false;
        if (!m.column_index(cls)) return false;
        for (const auto& [r, a] : m.entries_for_gaps(cls.gaps)) sum[r] += v * a;
    }
    for (const auto& s : sum)
        if (s != 1) return false;
    return true;
}

bool verify_farkas(const CompressedMatrix& m, const std::vector<Rat>& y) {
    if (static_cast<int>(y.size()) != m.rows()) return false;
    Rat total = 0;
    for (const auto& v : y) total += v;
    if (!(total < 0)) return false;
    for (int j = 0; j < m.cols(); ++j) {
        Rat s = 0;
        for (const auto& [r, a] : m.column_entries(j)) s += y[r] * a;
        if (s < 0) return false;
    }
    return true;
}

BigInt k4_witness_m(const Rat& w1, const Rat& w2) {
    if (w1 <= 0 || w2 <= 0) throw precondition_error("witness m needs positive w1, w2");
    Rat s = w1 + w2;
    return 2 * ceil_rat(12 * s * s / (w1 * w2)) + 1;
}

KkWitnessReport kk_witness_m(const std::vector<Rat>& weights, int k) {
    if (k <= 2) throw precondition_error("witness report needs k > 2");
    if (static_cast<int>(weights.size()) != k)
        throw precondition_error("expected one weight per length 1..k");
    if (weights[0] <= 0) throw precondition_error("witness report needs w_1 > 0");
    KkWitnessReport rep;
    rep.k = k;
    rep.c_k = Rat(16 * k);
    Rat shorter = 0, total = 0;
    for (int l = 1; l <= k; ++l) {
        if (weights[l - 1] < 0) throw precondition_error("negative weight");
        total += weights[l - 1];
        if (l < k) shorter += weights[l - 1];
    }
    rep.condition_holds = weights[k - 1] >= rep.c_k * shorter;
    if (rep.condition_holds) {
        rep.m_prime = ceil_rat(Rat(24 * k * k * k) * total / weights[0]);
        rep.m = 2 * rep.m_prime + 1;
    }
    return rep;
}

std::optional<MinimalFeasible> minimal_feasible_m(const WeightedCgg& w, int m_max) {
    int start = w.k() % 2 == 1 ? w.k() : w.k() + 1;
    for (int m = start; m <= m_max; m += 2) {
        auto outcome = solve_feasibility(compressed_matrix(w, m));
        if (outcome.feasible) return MinimalFeasible{m, std::move(outcome)};
    }
    return std::nullopt;
}

FractionalPacking fractional_packing_from_solution(const CompressedMatrix& m,
                                                   const std::map<RotationClass, Rat>& x,
                                                   long long materialize_cap) {
    for (const auto& [cls, v] : x)
        if (v < 0) throw precondition_error("fractional packing needs x >= 0");
    if (!verify_solution(m, x))
        throw precondition_error("fractional packing needs an exact solution of Mx = 1");

    FractionalPacking fp;
    fp.m = m.m();
    // number of copies in the support = sum of orbit sizes
    long long copies = 0;
    for (const auto& [cls, v] : x)
        if (v != 0) copies += cls.orbit_size();
    if (copies > materialize_cap) {
        // class-level result; the per-length system already verified above
        for (const auto& [cls, v] : x)
            if (v != 0) fp.copies.emplace_back(cls.gaps, v); // representative at offset 0
        fp.per_edge_verified = false;
        return fp;
    }

    for (const auto& [cls, v] : x) {
        if (v == 0) continue;
        for (int off = 0; off < cls.orbit_size(); ++off) {
            auto pos = positions_of_gaps(cls.gaps, m.m(), off);
            std::sort(pos.begin(), pos.end());
            fp.copies.emplace_back(std::move(pos), v);
        }
    }
    // exact per-edge check of the packing equation with unit host weights
    const int k = m.k();
    const auto& wl = m.weights_by_length();
    std::vector<std::vector<Rat>> per_edge(m.m(), std::vector<Rat>(m.m(), Rat(0)));
    for (const auto& [pos, phi] : fp.copies) {
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j) {
                // pattern length of this pair inside the copy's cyclic order
                int pat = std::min(j - i, k - (j - i));
                per_edge[pos[i]][pos[j]] += phi * wl[pat - 1];
            }
    }
    for (int u = 0; u < m.m(); ++u)
        for (int v = u + 1; v < m.m(); ++v)
            if (per_edge[u][v] != 1)
                throw verification_error("packing equation failed on an edge of the host");
    fp.per_edge_verified = true;
    return fp;
}

} // namespace cggpack
