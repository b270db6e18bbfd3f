#pragma once

#include "mfb/arrangement.hpp"
#include "mfb/calculus.hpp"
#include "mfb/graph.hpp"
#include "mfb/homology.hpp"
#include "mfb/strings.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace mfb {

using Json = nlohmann::json;

// Arrangement files are either {"lines": [[a, b, c], ...]} with integer or
// "p/q" entries, or {"n": n, "points": [[i, j, ...], ...]}.
struct ArrangementInput {
    IncidenceData incidence;
    std::optional<std::vector<ProjLine>> lines;
};

ArrangementInput arrangement_from_json(const Json& j);
Json incidence_to_json(const IncidenceData& inc);
Json lines_to_json(const std::vector<ProjLine>& lines);

// {"vertices": [{"id", "genus", "euler", "mult", "kind", "dec"}],
//  "edges": [{"a", "b", "sign", "type", "arrow"}]}
Json graph_to_json(const PlumbingGraph& g);
PlumbingGraph graph_from_json(const Json& j);

// [{"move": "blow_down_b", "vertex": "s1:w1_2#0", "neighbor": "v1"}, ...]
Json script_to_json(const std::vector<MoveSpec>& script);
std::vector<MoveSpec> script_from_json(const Json& j);

Json int_to_json(const Int& v);
Json group_to_json(const AbelianGroup& g);
Json string_graph_to_json(const StringGraph& s);
Json conjecture_to_json(const ConjectureReport& r);

bool looks_like_graph(const Json& j);

Json read_json_file(const std::string& path);

}  // namespace mfb
