#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cggpack/blowup.hpp"
#include "cggpack/chromatic.hpp"
#include "cggpack/embed.hpp"
#include "cggpack/error.hpp"
#include "cggpack/graph.hpp"

#include <set>

using namespace cggpack;

namespace {

// The 5-vertex cgg used throughout: edges (0,1),(1,2),(2,3),(1,3),(1,4),(0,4)
// in the canonical labeling of its convex position.
Graph figure_h() {
    return Graph::cgg(5, {{0, 1}, {1, 2}, {2, 3}, {1, 3}, {1, 4}, {0, 4}});
}

// Independent minimality oracle: enumerate every cut-position subset (cyclic
// partitions correspond to nonempty subsets of [0,n)) and report the minimum
// valid interval count. Different search structure from the library's.
int chi_by_cut_masks(const Graph& g) {
    int best = g.n + 1;
    for (unsigned mask = 1; mask < (1u << g.n); ++mask) {
        std::vector<int> starts;
        for (int v = 0; v < g.n; ++v)
            if (mask & (1u << v)) starts.push_back(v);
        if (g.kind == OrderKind::Linear && starts[0] != 0) continue;
        auto p = make_partition(g.kind, g.n, starts);
        if (partition_valid(g, p)) best = std::min(best, p.parts());
    }
    return best;
}

} // namespace

TEST_CASE("edge lengths in cyclic and linear hosts") {
    Graph k7c = complete_graph(7, OrderKind::Cyclic);
    Graph k7o = complete_graph(7, OrderKind::Linear);
    CHECK(edge_length(k7c, {0, 3}) == 3);
    CHECK(edge_length(k7c, {0, 6}) == 1);
    CHECK(edge_length(k7o, {2, 5}) == 3);
    CHECK(edge_length(k7o, {0, 6}) == 6);
    CHECK_THROWS_AS(edge_length(k7c, {2, 2}), precondition_error);
    CHECK_THROWS_AS(edge_length(k7c, {0, 7}), precondition_error);
}

TEST_CASE("average edge length closed forms") {
    CHECK(average_edge_length(5, true) == Rat(3, 2));
    CHECK(average_edge_length(101, true) == Rat(51, 2));
    CHECK(average_edge_length(3, true) == Rat(1));
    for (int n = 5; n <= 31; n += 2) CHECK(average_edge_length(n, true) == Rat(n + 1, 4));
    // ordered complete graphs average (n+1)/3
    for (int n = 3; n <= 20; ++n) CHECK(average_edge_length(n, false) == Rat(n + 1, 3));
}

TEST_CASE("length counts per length are uniform for odd n") {
    for (int n : {5, 7, 9, 11, 13}) {
        std::vector<int> counts((n - 1) / 2 + 1, 0);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                counts[edge_length(OrderKind::Cyclic, n, u, v)] += 1;
        long long total = 0;
        for (int l = 1; l <= (n - 1) / 2; ++l) {
            CHECK(counts[l] == n);
            total += counts[l];
        }
        CHECK(total == n * (n - 1) / 2);
    }
}

TEST_CASE("cyclic chromatic number") {
    auto c5 = cyclic_chromatic_number(plane_cycle(5));
    CHECK(c5.chi == 5);
    CHECK(partition_valid(plane_cycle(5), c5.witness));

    auto edgeless = cyclic_chromatic_number(Graph::cgg(4, {}));
    CHECK(edgeless.chi == 1);

    auto h = cyclic_chromatic_number(figure_h());
    CHECK(h.chi == 4);
    CHECK(partition_valid(figure_h(), h.witness));
    CHECK_FALSE(has_valid_partition(figure_h(), 3));

    // cross-check against the cut-mask oracle on assorted small graphs
    for (const auto& g : {plane_cycle(5), plane_cycle(6), figure_h(), complete_graph(5),
                          Graph::cgg(6, {{0, 3}, {1, 4}, {2, 5}})})
        CHECK(cyclic_chromatic_number(g).chi == chi_by_cut_masks(g));
}

TEST_CASE("interval chromatic number") {
    auto p3 = interval_chromatic_number(ordered_path(4));
    CHECK(p3.chi == 4);

    auto edge = interval_chromatic_number(Graph::ordered(2, {{0, 1}}));
    CHECK(edge.chi == 2);

    // edges only across one cut
    auto bip = interval_chromatic_number(Graph::ordered(6, {{0, 4}, {1, 3}, {2, 5}}));
    CHECK(bip.chi == 2);

    for (const auto& g : {ordered_path(4), ordered_path(5),
                          Graph::ordered(6, {{0, 4}, {1, 3}, {2, 5}})})
        CHECK(interval_chromatic_number(g).chi == chi_by_cut_masks(g));
}

TEST_CASE("embedding enumeration counts copies, not maps") {
    auto tri = enumerate_embeddings(complete_graph(3), complete_graph(5));
    CHECK(tri.size() == 10);
    std::set<std::set<int>> triples;
    for (const auto& e : tri) triples.insert({e.map.begin(), e.map.end()});
    CHECK(triples.size() == 10);
    CHECK(count_embedding_maps(complete_graph(3), complete_graph(5)) == 30);

    auto c4 = enumerate_embeddings(plane_cycle(4), complete_graph(4));
    CHECK(c4.size() == 1);
    CHECK(count_embedding_maps(plane_cycle(4), complete_graph(4)) == 4);

    CHECK(enumerate_embeddings(plane_cycle(5), complete_graph(4)).empty());

    // a pattern with no rotational symmetry: one edge on three cyclic vertices
    auto lop = enumerate_embeddings(Graph::cgg(3, {{0, 1}}), complete_graph(3));
    CHECK(lop.size() == 3);
}

TEST_CASE("every enumerated embedding passes the independent checker") {
    for (const auto& pattern : {plane_cycle(4), plane_cycle(5), figure_h(), complete_graph(4)}) {
        auto host = complete_graph(7);
        for (const auto& e : enumerate_embeddings(pattern, host))
            CHECK(embedding_valid(pattern, host, e));
    }
    // reflection is not an embedding
    Embedding reflected;
    reflected.map = {0, 4, 3, 2, 1};
    CHECK_FALSE(embedding_valid(plane_cycle(5), complete_graph(7), reflected));
    // rotation is
    Embedding rotated;
    rotated.map = {3, 4, 5, 6, 0};
    CHECK(embedding_valid(plane_cycle(5), complete_graph(7), rotated));
}

TEST_CASE("embedding limit caps output deterministically") {
    auto some = enumerate_embeddings(complete_graph(3), complete_graph(6), 4);
    auto all = enumerate_embeddings(complete_graph(3), complete_graph(6));
    REQUIRE(some.size() == 4);
    for (int i = 0; i < 4; ++i) CHECK(some[i].map == all[i].map);
}

TEST_CASE("blowup structure") {
    auto h = figure_h();
    CHECK(blowup(h, 1) == h);
    auto k3_2 = blowup(complete_graph(3), 2);
    CHECK(k3_2.n == 6);
    CHECK(k3_2.edge_count() == 12);
    CHECK(blowup(h, 2).edge_count() == 4 * h.edge_count());
    for (int t : {2, 3})
        for (const auto& g : {plane_cycle(4), figure_h()})
            CHECK(blowup(g, t).edge_count() == t * t * g.edge_count());
}

TEST_CASE("blowup preserves the cyclic chromatic number") {
    for (const auto& g : {complete_graph(3), plane_cycle(4), figure_h()}) {
        int chi = cyclic_chromatic_number(g).chi;
        for (int t : {2, 3}) {
            auto b = blowup(g, t);
            if (b.n > 12) {
                // witness blowup stays valid, and no smaller partition exists
                CHECK(has_valid_partition(b, chi));
                CHECK_FALSE(has_valid_partition(b, chi - 1));
            } else {
                CHECK(cyclic_chromatic_number(b).chi == chi);
            }
        }
    }
}

TEST_CASE("irregular blowup of the ordered triangle") {
    auto reg = irregular_blowup_k3(1, 1, 1, 3);
    CHECK(reg.n == 9);
    CHECK(reg.edge_count() == 27);

    auto g = irregular_blowup_k3(2, 1, 1, 1);
    CHECK(g.n == 5); // parts 2, 2, 1
    CHECK(g.edge_count() == 8);

    auto g2 = irregular_blowup_k3(1, 2, 3, 1);
    CHECK(g2.n == 11); // parts 2, 3, 6
    CHECK(g2.edge_count() == 2 * 3 + 2 * 6 + 3 * 6);

    CHECK_THROWS_AS(irregular_blowup_k3(0, 1, 1, 1), precondition_error);
}

TEST_CASE("interval partitions index and wrap correctly") {
    auto p = make_partition(OrderKind::Cyclic, 10, {2, 5, 8});
    CHECK(p.parts() == 3);
    CHECK(p.part_of(3) == 0);
    CHECK(p.part_of(5) == 1);
    CHECK(p.part_of(9) == 2);
    CHECK(p.part_of(0) == 2);
    CHECK(p.part_size(2) == 4);
    CHECK(p.part_vertices(2) == std::vector<int>{8, 9, 0, 1});

    CHECK_THROWS_AS(make_partition(OrderKind::Linear, 5, {1, 3}), precondition_error);
    CHECK_THROWS_AS(make_partition(OrderKind::Cyclic, 5, {0, 0}), precondition_error);
}

TEST_CASE("graph construction validates") {
    CHECK_THROWS_AS(Graph::cgg(3, {{0, 0}}), precondition_error);
    CHECK_THROWS_AS(Graph::cgg(3, {{0, 3}}), precondition_error);
    CHECK_THROWS_AS(Graph::cgg(3, {{0, 1}, {1, 0}}), precondition_error);
    auto g = Graph::cgg(3, {{2, 0}, {0, 1}});
    CHECK(g.edges == std::vector<Edge>{{0, 1}, {0, 2}});
}
