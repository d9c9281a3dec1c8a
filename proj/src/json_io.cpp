#include "cggpack/json_io.hpp"

#include "cggpack/error.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace cggpack {

namespace {

void require_keys(const ordered_json& j, std::initializer_list<const char*> keys,
                  const char* what) {
    if (!j.is_object()) throw precondition_error(std::string(what) + ": expected an object");
    for (const char* k : keys)
        if (!j.contains(k))
            throw precondition_error(std::string(what) + ": missing key '" + k + "'");
    for (auto it = j.begin(); it != j.end(); ++it) {
        bool known = false;
        for (const char* k : keys) known = known || it.key() == k;
        if (!known)
            throw precondition_error(std::string(what) + ": unknown key '" + it.key() + "'");
    }
}

} // namespace

ordered_json graph_to_json(const Graph& g) {
    ordered_json j;
    j["kind"] = g.is_cyclic() ? "cgg" : "ordered";
    j["n"] = g.n;
    auto edges = ordered_json::array();
    for (const auto& [u, v] : g.edges) edges.push_back(ordered_json::array({u, v}));
    j["edges"] = std::move(edges);
    return j;
}

Graph graph_from_json(const ordered_json& j) {
    require_keys(j, {"kind", "n", "edges"}, "graph");
    const auto kind = j.at("kind").get<std::string>();
    if (kind != "cgg" && kind != "ordered")
        throw precondition_error("graph: kind must be 'cgg' or 'ordered'");
    if (!j.at("n").is_number_integer()) throw precondition_error("graph: n must be an integer");
    int n = j.at("n").get<int>();
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
            !e[1].is_number_integer())
            throw precondition_error("graph: each edge must be a pair of integers");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return kind == "cgg" ? Graph::cgg(n, std::move(edges)) : Graph::ordered(n, std::move(edges));
}

ordered_json weighted_to_json(const WeightedCgg& w) {
    ordered_json j;
    j["k"] = w.k();
    if (auto by_length = w.length_uniform()) {
        ordered_json weights = ordered_json::object();
        for (std::size_t l = 1; l <= by_length->size(); ++l)
            weights[std::to_string(l)] = rat_to_string((*by_length)[l - 1]);
        j["weights"] = std::move(weights);
    } else {
        auto arr = ordered_json::array();
        for (int u = 0; u < w.k(); ++u)
            for (int v = u + 1; v < w.k(); ++v)
                arr.push_back(ordered_json::array({u, v, rat_to_string(w.weight(u, v))}));
        j["edge_weights"] = std::move(arr);
    }
    return j;
}

WeightedCgg weighted_from_json(const ordered_json& j) {
    if (!j.is_object() || !j.contains("k"))
        throw precondition_error("weighted cgg: expected an object with 'k'");
    int k = j.at("k").get<int>();
    if (j.contains("weights")) {
        require_keys(j, {"k", "weights"}, "weighted cgg");
        std::vector<Rat> by_length(k / 2, Rat(0));
        for (auto it = j.at("weights").begin(); it != j.at("weights").end(); ++it) {
            int l = std::stoi(it.key());
            if (l < 1 || l > k / 2)
                throw precondition_error("weighted cgg: length key out of range");
            by_length[l - 1] = rat_from_string(it.value().get<std::string>());
        }
        return WeightedCgg(k, std::move(by_length));
    }
    require_keys(j, {"k", "edge_weights"}, "weighted cgg");
    WeightedCgg w(k);
    for (const auto& e : j.at("edge_weights")) {
        if (!e.is_array() || e.size() != 3)
            throw precondition_error("weighted cgg: edge weight must be [u, v, \"p/q\"]");
        w.set_weight(e[0].get<int>(), e[1].get<int>(), rat_from_string(e[2].get<std::string>()));
    }
    return w;
}

ordered_json outcome_to_json(int m, int k, const std::vector<Rat>& weights,
                             const FeasibilityOutcome& outcome) {
    ordered_json j;
    j["m"] = m;
    j["k"] = k;
    auto ws = ordered_json::array();
    for (const auto& w : weights) ws.push_back(rat_to_string(w));
    j["weights"] = std::move(ws);
    j["feasible"] = outcome.feasible;
    if (outcome.feasible) {
        auto xs = ordered_json::array();
        for (const auto& [cls, v] : outcome.x) {
            ordered_json entry;
            entry["gaps"] = cls.gaps;
            entry["value"] = rat_to_string(v);
            xs.push_back(std::move(entry));
        }
        j["x"] = std::move(xs);
    } else {
        auto ys = ordered_json::array();
        for (const auto& v : outcome.certificate) ys.push_back(rat_to_string(v));
        j["certificate"] = std::move(ys);
    }
    j["pivots"] = outcome.pivots;
    j["pricing_rounds"] = outcome.pricing_rounds;
    j["columns_activated"] = outcome.columns_activated;
    return j;
}

ordered_json packing_to_json(const Packing& p, bool include_copies) {
    ordered_json j;
    j["host"] = ordered_json{{"kind", p.host.is_cyclic() ? "cgg" : "ordered"}, {"n", p.host.n}};
    j["pattern"] = graph_to_json(p.pattern);
    j["copy_count"] = p.copy_count();
    j["coverage"] = rat_to_string(p.coverage());
    char buf[32];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(p.digest()));
    j["digest"] = buf;
    if (include_copies) {
        auto arr = ordered_json::array();
        const long long count = p.copy_count();
        for (long long i = 0; i < count; ++i) {
            auto e = p.copy(i);
            arr.push_back(e.map);
        }
        j["copies"] = std::move(arr);
    }
    return j;
}

ordered_json pack_report_to_json(const PackRouteReport& rep) {
    ordered_json j;
    j["route"] = rep.route;
    j["chi_c"] = rep.chi_c;
    j["partition_starts"] = rep.partition.starts;
    auto ws = ordered_json::array();
    for (const auto& w : rep.uniform_weights) ws.push_back(rat_to_string(w));
    j["uniform_weights"] = std::move(ws);
    if (rep.witness_m) j["witness_m"] = rep.witness_m->str();
    if (rep.m_used) j["m_used"] = *rep.m_used;
    j["n0"] = rep.n0;
    j["t"] = rep.t;
    j["outer_coverage"] = rat_to_string(rep.outer_coverage);
    j["inner_coverage"] = rat_to_string(rep.inner_coverage);
    j["coverage"] = rat_to_string(rep.coverage);
    j["copies"] = rep.copies;
    j["verified"] = rep.verified;
    return j;
}

ordered_json ordered_result_to_json(const OrderedPackResult& res, bool include_copies) {
    ordered_json j;
    j["route"] = res.route;
    j["chi"] = res.chi;
    j["e"] = ordered_json::array({res.e12, res.e13, res.e23});
    j["q"] = res.q;
    j["cutoff"] = res.cutoff;
    auto levels = ordered_json::array();
    for (const auto& l : res.levels) {
        ordered_json lj;
        lj["lo"] = l.lo;
        lj["hi"] = l.hi;
        lj["n_prime"] = l.n_prime;
        lj["sizes"] = ordered_json::array({l.sizes[0], l.sizes[1], l.sizes[2]});
        lj["i4"] = l.i4;
        lj["copies"] = l.copies;
        levels.push_back(std::move(lj));
    }
    j["levels"] = std::move(levels);
    j["verified"] = res.verified;
    j["packing"] = packing_to_json(res.packing, include_copies);
    return j;
}

std::string canonical_dump(const ordered_json& j) { return j.dump(); }

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw precondition_error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw precondition_error("cannot write file: " + tmp);
        out << content;
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw precondition_error("cannot move result into place: " + path);
}

} // namespace cggpack
