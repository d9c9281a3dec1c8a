#include "cggpack/cli.hpp"

#include "cggpack/chromatic.hpp"
#include "cggpack/error.hpp"
#include "cggpack/json_io.hpp"
#include "cggpack/obstruction.hpp"
#include "cggpack/pipeline.hpp"

#include <CLI11.hpp>

#include <ostream>

namespace cggpack {

namespace {

constexpr const char* kVersion = "0.1.0";

Graph load_graph(const std::string& path) {
    return graph_from_json(ordered_json::parse(read_text_file(path)));
}

int run_chroma(const std::string& input, std::ostream& out) {
    Graph g = load_graph(input);
    ChromaticResult res =
        g.is_cyclic() ? cyclic_chromatic_number(g) : interval_chromatic_number(g);
    out << (g.is_cyclic() ? "chi_c = " : "chi_< = ") << res.chi << "\n";
    ordered_json j;
    j["chi"] = res.chi;
    j["kind"] = g.is_cyclic() ? "cgg" : "ordered";
    j["witness_starts"] = res.witness.starts;
    out << canonical_dump(j) << "\n";
    return 0;
}

std::vector<Rat> parse_weight_list(const std::string& csv) {
    std::vector<Rat> ws;
    std::size_t pos = 0;
    while (pos <= csv.size()) {
        auto comma = csv.find(',', pos);
        if (comma == std::string::npos) comma = csv.size();
        ws.push_back(rat_from_string(csv.substr(pos, comma - pos)));
        pos = comma + 1;
    }
    return ws;
}

int run_feasible(int k, const std::string& weights_csv, int m_flag, bool witness, bool minimal,
                 int mmax, const std::string& out_path, std::ostream& out) {
    auto weights = parse_weight_list(weights_csv);
    if (static_cast<int>(weights.size()) != k / 2)
        throw precondition_error("expected one weight per length 1..k/2");
    WeightedCgg w(k, weights);

    ordered_json result;
    if (witness) {
        BigInt wm;
        if (k == 4) {
            wm = k4_witness_m(weights[0], weights[1]);
        } else if (k >= 6 && k % 2 == 0) {
            auto rep = kk_witness_m(weights, k / 2);
            if (!rep.condition_holds) {
                result["condition_holds"] = false;
                out << canonical_dump(result) << "\n";
                return 0;
            }
            result["condition_holds"] = true;
            wm = rep.m;
        } else {
            throw precondition_error("--witness needs an even pattern size");
        }
        result["witness_m"] = wm.str();
        if (wm <= mmax) {
            int m = wm.convert_to<int>();
            auto outcome = solve_feasibility(compressed_matrix(w, m));
            result["solved"] = outcome_to_json(m, k, weights, outcome);
        } else {
            result["solved"] = nullptr; // exceeds the desk-scale cap
        }
    } else if (minimal) {
        auto scan = minimal_feasible_m(w, mmax);
        if (scan) {
            result["minimal_m"] = scan->m;
            result["solved"] = outcome_to_json(scan->m, k, weights, scan->outcome);
        } else {
            result["minimal_m"] = nullptr;
        }
    } else {
        if (m_flag <= 0) throw precondition_error("one of --m, --witness, --minimal is required");
        auto outcome = solve_feasibility(compressed_matrix(w, m_flag));
        result = outcome_to_json(m_flag, k, weights, outcome);
    }
    auto text = canonical_dump(result);
    out << text << "\n";
    if (!out_path.empty()) write_text_file(out_path, text + "\n");
    return 0;
}

int run_pack(const std::string& input, int n, std::vector<std::uint64_t> seeds, double epsilon,
             int cutoff, const std::string& out_path, const std::string& manifest_path,
             bool full, std::ostream& out) {
    Graph g = load_graph(input);
    if (seeds.empty()) seeds = {1};

    ordered_json manifest;
    manifest["artifact"] = "cggpack";
    manifest["version"] = kVersion;
    manifest["command"] = "pack";
    manifest["input"] = graph_to_json(g);
    manifest["n"] = n;
    manifest["seeds"] = seeds;
    manifest["epsilon"] = epsilon;
    manifest["cutoff"] = cutoff;

    ordered_json runs = ordered_json::array();
    for (auto seed : seeds) {
        ordered_json run;
        run["seed"] = seed;
        if (g.is_cyclic()) {
            auto res = pack_chi_le4(g, n, seed);
            run["report"] = pack_report_to_json(res.report);
            run["packing"] = packing_to_json(res.packing, full);
        } else {
            OrderedPackOptions opt;
            opt.cutoff = cutoff;
            auto res = pack_ordered_chi3(g, n, epsilon, seed, opt);
            run["result"] = ordered_result_to_json(res, full);
        }
        runs.push_back(std::move(run));
    }

    ordered_json result;
    result["manifest"] = manifest;
    result["runs"] = std::move(runs);
    auto text = canonical_dump(result);
    out << text << "\n";
    if (!out_path.empty()) write_text_file(out_path, text + "\n");
    if (!manifest_path.empty()) write_text_file(manifest_path, canonical_dump(manifest) + "\n");
    return 0;
}

int run_bound(const std::string& input, int n, const std::string& packing_path,
              std::ostream& out) {
    Graph g = load_graph(input);
    auto cb = coverage_upper_bound(g, n);
    ordered_json j;
    j["n"] = n;
    j["L"] = cb.max_total_length.str();
    j["bound"] = rat_to_string(cb.bound);
    j["mode"] = cb.mode == TotalLengthMode::Exact ? "exact" : "cycle-bound";
    if (!packing_path.empty()) {
        auto pj = ordered_json::parse(read_text_file(packing_path));
        Rat achieved = rat_from_string(pj.at("coverage").get<std::string>());
        j["achieved"] = rat_to_string(achieved);
        j["achieved_le_bound"] = achieved <= cb.bound;
    }
    out << canonical_dump(j) << "\n";
    return 0;
}

} // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"convex geometric graph packing toolkit"};
    app.set_version_flag("--version", kVersion);

    std::string input, weights_csv, out_path, manifest_path, packing_path;
    int n = 0, k = 0, m_flag = 0, mmax = 199, cutoff = 0;
    bool witness = false, minimal = false, full = false;
    double epsilon = 0.25;
    std::vector<std::uint64_t> seeds;

    auto* chroma = app.add_subcommand("chroma", "chromatic interval analysis of a graph file");
    chroma->add_option("--input", input)->required();

    auto* feasible =
        app.add_subcommand("feasible", "fractional packing feasibility over a complete host");
    feasible->add_option("--k", k)->required();
    feasible->add_option("--weights", weights_csv, "per-length weights w_1,..,w_{k/2}")->required();
    feasible->add_option("--m", m_flag);
    feasible->add_flag("--witness", witness);
    feasible->add_flag("--minimal", minimal);
    feasible->add_option("--mmax", mmax);
    feasible->add_option("--out", out_path);

    auto* pack = app.add_subcommand("pack", "construct an edge-disjoint packing of K_n");
    pack->add_option("--input", input)->required();
    pack->add_option("--n", n)->required();
    pack->add_option("--seed", seeds);
    pack->add_option("--epsilon", epsilon);
    pack->add_option("--cutoff", cutoff);
    pack->add_option("--out", out_path);
    pack->add_option("--manifest", manifest_path);
    pack->add_flag("--full", full, "embed the full copy list in the result");

    auto* bound = app.add_subcommand("bound", "average-length obstruction report");
    bound->add_option("--input", input)->required();
    bound->add_option("--n", n)->required();
    bound->add_option("--packing", packing_path);

    app.require_subcommand(1);

    std::vector<const char*> argv;
    argv.push_back("cggpack");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForVersion&) {
        out << kVersion << "\n";
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "argument error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (chroma->parsed()) return run_chroma(input, out);
        if (feasible->parsed())
            return run_feasible(k, weights_csv, m_flag, witness, minimal, mmax, out_path, out);
        if (pack->parsed())
            return run_pack(input, n, seeds, epsilon, cutoff, out_path, manifest_path, full, out);
        if (bound->parsed()) return run_bound(input, n, packing_path, out);
    } catch (const nlohmann::json::parse_error& e) {
        err << "parse error: " << e.what() << "\n";
        return 4;
    } catch (const verification_error& e) {
        err << "verification failure: " << e.what() << "\n";
        return 3;
    } catch (const route_error& e) {
        err << "route error: " << e.what() << "\n";
        return 2;
    } catch (const precondition_error& e) {
        err << "precondition error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

} // namespace cggpack
