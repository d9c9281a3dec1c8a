#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cggpack/cli.hpp"
#include "cggpack/error.hpp"
#include "cggpack/json_io.hpp"

#include <sstream>

using namespace cggpack;

namespace {

int run(const std::vector<std::string>& args, std::string* out_text = nullptr,
        std::string* err_text = nullptr) {
    std::ostringstream out, err;
    int code = cli_run(args, out, err);
    if (out_text) *out_text = out.str();
    if (err_text) *err_text = err.str();
    return code;
}

void write_file(const std::string& path, const std::string& text) { write_text_file(path, text); }

} // namespace

TEST_CASE("graph json round trip is byte-identical on canonical input") {
    auto g = Graph::cgg(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
    auto dumped = canonical_dump(graph_to_json(g));
    auto reparsed = graph_from_json(ordered_json::parse(dumped));
    CHECK(reparsed == g);
    CHECK(canonical_dump(graph_to_json(reparsed)) == dumped);
}

TEST_CASE("graph json validation is strict") {
    CHECK_THROWS_AS(graph_from_json(ordered_json::parse(R"({"kind":"cgg","n":3})")),
                    precondition_error);
    CHECK_THROWS_AS(
        graph_from_json(ordered_json::parse(R"({"kind":"dag","n":3,"edges":[]})")),
        precondition_error);
    CHECK_THROWS_AS(
        graph_from_json(ordered_json::parse(R"({"kind":"cgg","n":3,"edges":[[0,0]]})")),
        precondition_error);
    CHECK_THROWS_AS(
        graph_from_json(ordered_json::parse(R"({"kind":"cgg","n":3,"edges":[[0,3]]})")),
        precondition_error);
    CHECK_THROWS_AS(
        graph_from_json(ordered_json::parse(R"({"kind":"cgg","n":3,"edges":[[0,1],[1,0]]})")),
        precondition_error);
    CHECK_THROWS_AS(
        graph_from_json(ordered_json::parse(R"({"kind":"cgg","n":3,"edges":[],"x":1})")),
        precondition_error);
}

TEST_CASE("weighted cgg json carries exact rationals both ways") {
    WeightedCgg w(4, {Rat(1, 3), Rat(5)});
    auto j = weighted_to_json(w);
    CHECK(j["weights"]["1"] == "1/3");
    auto back = weighted_from_json(j);
    CHECK(back == w);

    WeightedCgg skew(3);
    skew.set_weight(0, 1, Rat(2));
    skew.set_weight(1, 2, Rat(1, 2));
    skew.set_weight(0, 2, Rat(0));
    auto j2 = weighted_to_json(skew);
    CHECK(j2.contains("edge_weights"));
    CHECK(weighted_from_json(j2) == skew);
}

TEST_CASE("rational string form") {
    CHECK(rat_to_string(Rat(-3, 6)) == "-1/2");
    CHECK(rat_to_string(Rat(4)) == "4");
    CHECK(rat_from_string("7/3") == Rat(7, 3));
    CHECK(rat_from_string("-2") == Rat(-2));
    CHECK_THROWS_AS(rat_from_string("1/0"), precondition_error);
    CHECK_THROWS_AS(rat_from_string("a/b"), precondition_error);
}

TEST_CASE("cli chroma") {
    write_file("c5.json", canonical_dump(graph_to_json(plane_cycle(5))) + "\n");
    std::string out;
    CHECK(run({"chroma", "--input", "c5.json"}, &out) == 0);
    CHECK(out.find("chi_c = 5") != std::string::npos);

    write_file("p3.json", canonical_dump(graph_to_json(ordered_path(4))) + "\n");
    CHECK(run({"chroma", "--input", "p3.json"}, &out) == 0);
    CHECK(out.find("chi_< = 4") != std::string::npos);

    write_file("edgeless.json", R"({"kind":"cgg","n":4,"edges":[]})");
    CHECK(run({"chroma", "--input", "edgeless.json"}, &out) == 0);
    CHECK(out.find("chi_c = 1") != std::string::npos);
}

TEST_CASE("cli feasible") {
    std::string out;
    CHECK(run({"feasible", "--k", "3", "--weights", "1", "--m", "5"}, &out) == 0);
    auto j = ordered_json::parse(out);
    CHECK(j["feasible"] == true);
    REQUIRE(j["x"].size() == 2);
    CHECK(j["x"][0]["value"] == "1/3");
    CHECK(j["x"][0]["gaps"] == ordered_json::array({1, 1, 3}));

    std::string err;
    CHECK(run({"feasible", "--k", "4", "--weights", "1,1", "--m", "96"}, &out, &err) == 2);
    CHECK(err.find("odd") != std::string::npos);

    CHECK(run({"feasible", "--k", "4", "--weights", "1,0", "--m", "13"}, &out) == 0);
    auto jc = ordered_json::parse(out);
    CHECK(jc["feasible"] == false);
    CHECK(jc["certificate"].size() == 6);

    CHECK(run({"feasible", "--k", "4", "--weights", "1,1", "--minimal"}, &out) == 0);
    auto jm = ordered_json::parse(out);
    CHECK(jm["minimal_m"] == 5);
}

TEST_CASE("cli pack and bound work together") {
    write_file("k3.json", canonical_dump(graph_to_json(complete_graph(3))) + "\n");
    std::string out;
    CHECK(run({"pack", "--input", "k3.json", "--n", "21", "--seed", "4", "--out",
               "k3_packing.json"},
              &out) == 0);
    auto j = ordered_json::parse(out);
    CHECK(j["runs"][0]["report"]["verified"] == true);
    CHECK(j["runs"][0]["report"]["route"] == "chi3-triangle");

    // determinism: identical invocation, identical bytes
    std::string out2;
    CHECK(run({"pack", "--input", "k3.json", "--n", "21", "--seed", "4", "--out",
               "k3_packing.json"},
              &out2) == 0);
    CHECK(out == out2);

    // route error for the plane 5-cycle
    write_file("c5.json", canonical_dump(graph_to_json(plane_cycle(5))) + "\n");
    std::string err;
    CHECK(run({"pack", "--input", "c5.json", "--n", "31"}, &out, &err) == 2);
    CHECK(err.find("chi_c = 5") != std::string::npos);

    // bound report plus achieved-vs-bound comparison
    auto pk = pack_chi_le4(complete_graph(3), 21, 4);
    write_file("k3_only_packing.json", canonical_dump(packing_to_json(pk.packing, false)) + "\n");
    CHECK(run({"bound", "--input", "k3.json", "--n", "21", "--packing", "k3_only_packing.json"},
              &out) == 0);
    auto jb = ordered_json::parse(out);
    CHECK(jb["achieved_le_bound"] == true);

    CHECK(run({"bound", "--input", "k3.json", "--n", "20"}, &out, &err) == 2);
}

TEST_CASE("cli error codes for bad input files") {
    write_file("broken.json", "{\"kind\":\"cgg\",");
    std::string out, err;
    CHECK(run({"chroma", "--input", "broken.json"}, &out, &err) == 4);
    CHECK(err.find("parse error") != std::string::npos);

    CHECK(run({"chroma", "--input", "missing_file.json"}, &out, &err) == 2);

    write_file("dup.json", R"({"kind":"cgg","n":3,"edges":[[0,1],[0,1]]})");
    CHECK(run({"chroma", "--input", "dup.json"}, &out, &err) == 2);
    CHECK(err.find("duplicate") != std::string::npos);
}

TEST_CASE("cli help exits cleanly") {
    std::string out;
    CHECK(run({"--help"}, &out) == 0);
    CHECK(out.find("chroma") != std::string::npos);
}

TEST_CASE("cli pack on an ordered graph reports the recursion trace") {
    write_file("ord.json",
               canonical_dump(graph_to_json(
                   Graph::ordered(4, {{0, 2}, {1, 2}, {0, 3}, {2, 3}}))) +
                   "\n");
    std::string out;
    CHECK(run({"pack", "--input", "ord.json", "--n", "400", "--seed", "2", "--cutoff", "10"},
              &out) == 0);
    auto j = ordered_json::parse(out);
    auto& result = j["runs"][0]["result"];
    CHECK(result["verified"] == true);
    CHECK(result["q"] == 5);
    CHECK(result["levels"].size() >= 1);
    CHECK(result["levels"][0]["sizes"][0] == 2 * result["levels"][0]["n_prime"].get<int>());
}
