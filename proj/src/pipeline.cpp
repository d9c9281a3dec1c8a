#include "cggpack/pipeline.hpp"

#include "cggpack/blowup.hpp"
#include "cggpack/compose.hpp"
#include "cggpack/error.hpp"
#include "cggpack/greedy.hpp"
#include "cggpack/hypergraph.hpp"
#include "cggpack/rng.hpp"
#include "cggpack/schedule.hpp"
#include "cggpack/weighted.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace cggpack {

namespace {

// n0 * t <= n with n0 near sqrt(n); ties prefer triangle-friendly n0
// (1 or 3 mod 6), then the larger n0. odd_outer restricts to odd n0.
std::pair<int, int> choose_composition(int n, int min_n0, bool odd_outer) {
    int root = std::max(min_n0, static_cast<int>(std::sqrt(static_cast<double>(n))));
    int best_n0 = -1, best_t = -1;
    long long best_area = -1;
    for (int n0 = std::max(min_n0, root - 3); n0 <= root + 3; ++n0) {
        if (odd_outer && n0 % 2 == 0) continue;
        int t = n / n0;
        if (t < 1) continue;
        long long area = static_cast<long long>(n0) * t;
        bool friendly = n0 % 6 == 1 || n0 % 6 == 3;
        if (area > best_area ||
            (area == best_area && friendly && !(best_n0 % 6 == 1 || best_n0 % 6 == 3)) ||
            (area == best_area && friendly == (best_n0 % 6 == 1 || best_n0 % 6 == 3) &&
             n0 > best_n0)) {
            best_area = area;
            best_n0 = n0;
            best_t = t;
        }
    }
    if (best_n0 < 0) throw precondition_error("host too small for a composed route");
    return {best_n0, best_t};
}

// best-of nibble packing of G into H[t]
Packing best_inner_packing(const Graph& g, const IntervalPartition& p, const Graph& h,
                           const PhiOnHost& phi, int t, Rng& rng, int restarts,
                           double epsilon) {
    Packing best;
    bool have = false;
    for (int r = 0; r < std::max(1, restarts); ++r) {
        Rng fork = rng.fork(r);
        auto hg = build_copy_hypergraph(g, p, h, phi, t, fork.next());
        auto nib = nibble_matching(hg, epsilon, fork.next());
        auto pk = packing_from_selection(hg, nib.selected);
        if (!have || pk.copy_count() > best.copy_count()) {
            best = std::move(pk);
            have = true;
        }
    }
    if (!have) throw verification_error("inner packing produced nothing");
    return best;
}

// The composed packing lives in K_{n0*t}; rehost it on the first n0*t
// vertices of K_n (cyclic order restricts cleanly to a contiguous block).
Packing rehost(Packing p, int n, OrderKind kind) {
    if (p.host.n > n) throw precondition_error("rehost target smaller than the packing host");
    p.host = complete_graph(n, kind);
    return p;
}

PackResult finish(Packing packing, PackRouteReport rep) {
    auto verdict = verify_packing(packing);
    if (!verdict.ok)
        throw verification_error("pipeline emitted an invalid packing: " + verdict.summary());
    rep.verified = true;
    rep.copies = packing.copy_count();
    rep.coverage = packing.coverage();
    return PackResult{std::move(packing), std::move(rep)};
}

} // namespace

PackResult pack_chi_le4(const Graph& g, int n, std::uint64_t seed, const PackOptions& opt) {
    if (!g.is_cyclic()) throw precondition_error("pack_chi_le4 takes a cgg");
    if (n < g.n) throw precondition_error("host smaller than the pattern");
    auto chroma = cyclic_chromatic_number(g);
    PackRouteReport rep;
    rep.chi_c = chroma.chi;
    rep.partition = chroma.witness;

    Rng rng(seed);
    GreedyOptions gopt;
    gopt.restarts = opt.outer_restarts;
    gopt.failure_budget = opt.greedy_failure_budget;

    if (chroma.chi > 4)
        throw route_error("chi_c = " + std::to_string(chroma.chi) +
                          " > 4: unsupported here; check long_edge_condition for a 2k-part route");

    const Graph host = complete_graph(n, OrderKind::Cyclic);

    if (chroma.chi <= 2) {
        rep.route = "chi2-greedy";
        rep.n0 = n;
        rep.t = 1;
        auto res = greedy_maximal_packing(g, host, rng.next(), gopt);
        rep.outer_coverage = res.packing.coverage();
        rep.inner_coverage = rep.outer_coverage;
        return finish(std::move(res.packing), std::move(rep));
    }

    const WeightedCgg w = weighted_representation(g, chroma.witness);
    auto uni = uniformize_by_rotation(w);
    rep.uniform_weights = uni.by_length;

    if (chroma.chi == 3) {
        rep.route = "chi3-triangle";
        auto [n0, t] = choose_composition(n, 3, false);
        rep.n0 = n0;
        rep.t = t;
        const Graph h = complete_graph(3, OrderKind::Cyclic);
        // the triangle base goes through hill-climbing switches: plain greedy
        // tops out well short of the triple-system optimum past tiny hosts
        auto outer = triangle_system_packing(n0, rng.next());
        rep.outer_coverage = outer.coverage();
        auto phi = phi_rotation_scaling(w, h);
        auto inner = best_inner_packing(g, chroma.witness, h, phi, t, rng, opt.inner_restarts, opt.epsilon);
        rep.inner_coverage = inner.coverage();
        auto composed = compose_packings(outer, inner, t);
        return finish(rehost(std::move(composed.packing), n, OrderKind::Cyclic), std::move(rep));
    }

    // chi_c = 4
    const Rat w1 = uni.by_length[0], w2 = uni.by_length[1];
    if (w1 <= 0) throw verification_error("chi_c = 4 pattern with vanishing side weight");

    if (w2 == 0) {
        rep.route = "chi4-c4";
        auto [n0, t] = choose_composition(n, 17, /*odd_outer=*/true);
        rep.n0 = n0;
        rep.t = t;
        const Graph h = plane_cycle(4);
        auto quads = c4_quad_cover(n0);
        auto sched = rotation_schedule_packing(WeightedCgg(4, {Rat(1), Rat(0)}), quads, n0);
        rep.outer_coverage = sched.packing.coverage();
        auto phi = phi_rotation_scaling(w, h);
        auto inner = best_inner_packing(g, chroma.witness, h, phi, t, rng, opt.inner_restarts, opt.epsilon);
        rep.inner_coverage = inner.coverage();
        auto composed = compose_packings(sched.packing, inner, t);
        return finish(rehost(std::move(composed.packing), n, OrderKind::Cyclic), std::move(rep));
    }

    rep.route = "chi4-km";
    rep.witness_m = k4_witness_m(w1, w2);
    int m_used = 0;
    FeasibilityOutcome outcome;
    if (opt.use_witness_m && *rep.witness_m <= opt.minimal_m_cap) {
        m_used = rep.witness_m->convert_to<int>();
        outcome = solve_feasibility(compressed_matrix(WeightedCgg(4, {w1, w2}), m_used));
        if (!outcome.feasible)
            throw verification_error("witness host came back infeasible");
    } else {
        auto scan = minimal_feasible_m(WeightedCgg(4, {w1, w2}), opt.minimal_m_cap);
        if (!scan)
            throw route_error("no feasible host found below the scan cap");
        m_used = scan->m;
        outcome = std::move(scan->outcome);
    }
    rep.m_used = m_used;

    auto [n0, t] = choose_composition(n, m_used, false);
    rep.n0 = n0;
    rep.t = t;
    const Graph h = complete_graph(m_used, OrderKind::Cyclic);
    auto outer = greedy_maximal_packing(h, complete_graph(n0, OrderKind::Cyclic), rng.next(), gopt);
    rep.outer_coverage = outer.packing.coverage();
    auto phi = phi_from_solution(compressed_matrix(WeightedCgg(4, {w1, w2}), m_used), outcome.x);
    auto inner = best_inner_packing(g, chroma.witness, h, phi, t, rng, opt.inner_restarts, opt.epsilon);
    rep.inner_coverage = inner.coverage();
    auto composed = compose_packings(outer.packing, inner, t);
    return finish(rehost(std::move(composed.packing), n, OrderKind::Cyclic), std::move(rep));
}

namespace {

struct OrderedContext {
    const Graph& g;
    const std::vector<std::vector<int>>& part_vertices; // pattern vertices by part, rank order
    int s[3];
    int e12, e13, e23, q;
    int cutoff;
    double epsilon;
    long long reject_cutoff;
    std::vector<bool> used;     // global edge bitmap over K_n
    std::vector<int> flat;      // accepted copies
    std::vector<OrderedLevel> levels;
    int host_n = 0;
};

void pack_level(OrderedContext& ctx, int lo, int hi, Rng& rng) {
    const int n_cur = hi - lo;
    const int n_prime = n_cur / ctx.q;
    if (n_prime < ctx.cutoff) return;

    OrderedLevel lvl;
    lvl.lo = lo;
    lvl.hi = hi;
    lvl.n_prime = n_prime;
    lvl.sizes[0] = ctx.e12 * ctx.e13 * n_prime;
    lvl.sizes[1] = ctx.e12 * ctx.e23 * n_prime;
    lvl.sizes[2] = ctx.e13 * ctx.e23 * n_prime;
    lvl.i4 = n_cur - lvl.sizes[0] - lvl.sizes[1] - lvl.sizes[2];

    const int base[3] = {lo, lo + lvl.sizes[0], lo + lvl.sizes[0] + lvl.sizes[1]};
    const long long cross_edges =
        static_cast<long long>(lvl.sizes[0]) * lvl.sizes[1] +
        static_cast<long long>(lvl.sizes[0]) * lvl.sizes[2] +
        static_cast<long long>(lvl.sizes[1]) * lvl.sizes[2];
    const int r = ctx.g.edge_count();

    int max_part = std::max({ctx.s[0], ctx.s[1], ctx.s[2]});
    int delta_max =
        max_part >= 2 ? std::max(1, static_cast<int>(std::floor(std::log(std::max(2, n_prime)))))
                      : 1;

    // sampling budget ~ (2/eps) per hypergraph vertex over r
    long long budget = static_cast<long long>(std::ceil(2.0 / ctx.epsilon)) *
                       std::max<long long>(1, cross_edges / std::max(1, r));
    budget = std::max<long long>(budget, 2'000);

    std::vector<int> map(ctx.g.n);
    long long consecutive_rejects = 0;
    Rng local = rng.fork(static_cast<std::uint64_t>(lo) * 2 + 1);
    for (long long it = 0; it < budget && consecutive_rejects < ctx.reject_cutoff; ++it) {
        ++lvl.candidates;
        int delta = 1 + local.below_int(delta_max);
        bool fits = true;
        int off[3];
        for (int i = 0; i < 3 && fits; ++i) {
            int room = lvl.sizes[i] - (ctx.s[i] - 1) * delta;
            if (room < 1) {
                fits = false;
                break;
            }
            off[i] = local.below_int(room);
        }
        if (!fits) {
            ++consecutive_rejects;
            continue;
        }
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < ctx.s[i]; ++j)
                map[ctx.part_vertices[i][j]] = base[i] + off[i] + j * delta;
        bool free = true;
        for (const auto& [u, v] : ctx.g.edges)
            if (ctx.used[edge_id(ctx.host_n, map[u], map[v])]) {
                free = false;
                break;
            }
        if (!free) {
            ++consecutive_rejects;
            continue;
        }
        for (const auto& [u, v] : ctx.g.edges) ctx.used[edge_id(ctx.host_n, map[u], map[v])] = true;
        ctx.flat.insert(ctx.flat.end(), map.begin(), map.end());
        ++lvl.copies;
        consecutive_rejects = 0;
    }

    ctx.levels.push_back(lvl);
    pack_level(ctx, base[0], base[0] + lvl.sizes[0], rng);
    pack_level(ctx, base[1], base[1] + lvl.sizes[1], rng);
    pack_level(ctx, base[2], base[2] + lvl.sizes[2], rng);
}

} // namespace

OrderedPackResult pack_ordered_chi3(const Graph& g, int n, double epsilon, std::uint64_t seed,
                                    const OrderedPackOptions& opt) {
    if (g.is_cyclic()) throw precondition_error("pack_ordered_chi3 takes an ordered graph");
    if (epsilon <= 0 || epsilon > 1) throw precondition_error("epsilon must lie in (0, 1]");
    auto chroma = interval_chromatic_number(g);

    OrderedPackResult res;
    res.chi = chroma.chi;
    if (chroma.chi > 3)
        throw route_error("chi_< = " + std::to_string(chroma.chi) + " > 3: unsupported");

    const Graph host = complete_graph(n, OrderKind::Linear);
    if (chroma.chi <= 2) {
        res.route = "chi2-greedy";
        GreedyOptions gopt;
        auto greedy = greedy_maximal_packing(g, host, seed, gopt);
        res.packing = std::move(greedy.packing);
        auto verdict = verify_packing(res.packing);
        if (!verdict.ok) throw verification_error("greedy emitted an invalid packing");
        res.verified = true;
        return res;
    }

    res.route = "chi3-recursive";
    const auto& p = chroma.witness;
    std::vector<std::vector<int>> part_vertices(3);
    for (int i = 0; i < 3; ++i) part_vertices[i] = p.part_vertices(i);
    long long cross[3][3] = {};
    for (const auto& [u, v] : g.edges) cross[p.part_of(u)][p.part_of(v)] += 1;
    res.e12 = static_cast<int>(cross[0][1] + cross[1][0]);
    res.e13 = static_cast<int>(cross[0][2] + cross[2][0]);
    res.e23 = static_cast<int>(cross[1][2] + cross[2][1]);
    if (res.e12 < 1 || res.e13 < 1 || res.e23 < 1)
        throw route_error("recursive route needs every cross-pair class nonempty");
    res.q = res.e12 * res.e13 + res.e12 * res.e23 + res.e13 * res.e23;

    int max_e = std::max({res.e12, res.e13, res.e23});
    res.cutoff = opt.cutoff > 0 ? opt.cutoff : 3 * max_e * max_e * g.n;

    OrderedContext ctx{g,
                       part_vertices,
                       {static_cast<int>(part_vertices[0].size()),
                        static_cast<int>(part_vertices[1].size()),
                        static_cast<int>(part_vertices[2].size())},
                       res.e12,
                       res.e13,
                       res.e23,
                       res.q,
                       res.cutoff,
                       epsilon,
                       opt.reject_cutoff,
                       std::vector<bool>(static_cast<std::size_t>(n) * (n - 1) / 2, false),
                       {},
                       {},
                       n};
    Rng rng(seed);
    pack_level(ctx, 0, n, rng);

    res.packing = Packing{host, g, std::move(ctx.flat)};
    res.levels = std::move(ctx.levels);
    auto verdict = verify_packing(res.packing);
    if (!verdict.ok)
        throw verification_error("recursive packer emitted an invalid packing: " + verdict.summary());
    res.verified = true;
    return res;
}

} // namespace cggpack
