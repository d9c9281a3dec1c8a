#pragma once

#include "cggpack/feasibility.hpp"
#include "cggpack/graph.hpp"
#include "cggpack/packing.hpp"
#include "cggpack/pipeline.hpp"
#include "cggpack/weighted.hpp"

#include <json.hpp>

#include <string>

namespace cggpack {

using ordered_json = nlohmann::ordered_json;

// Graph files: {"kind":"cgg"|"ordered","n":int,"edges":[[u,v],...]}.
// Strict: exactly these keys, endpoints in range, no duplicates or loops.
ordered_json graph_to_json(const Graph& g);
Graph graph_from_json(const ordered_json& j);

ordered_json weighted_to_json(const WeightedCgg& w);
WeightedCgg weighted_from_json(const ordered_json& j);

ordered_json outcome_to_json(int m, int k, const std::vector<Rat>& weights,
                             const FeasibilityOutcome& outcome);

// include_copies embeds the full copy list; the digest always rides along so
// large results stay byte-comparable without the list.
ordered_json packing_to_json(const Packing& p, bool include_copies);

ordered_json pack_report_to_json(const PackRouteReport& rep);
ordered_json ordered_result_to_json(const OrderedPackResult& res, bool include_copies);

std::string canonical_dump(const ordered_json& j);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content); // atomic rename

} // namespace cggpack
