#pragma once

#include "mfb/arrangement.hpp"
#include "mfb/graph.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace mfb {

enum class MoveKind {
    sign_reversal,
    blow_down_a,
    blow_down_b,
    zero_chain_absorb,
    handle_absorb,
    split,
    two_alteration,
};

// One calculus step. `neighbor` disambiguates the moves that single out one
// neighbor of the target:
//   zero_chain_absorb  the neighbor that survives (its edges keep their signs)
//   split              the weight-0 leaf hanging off the target
//   two_alteration     the neighbor whose edge sign flips
// When absent, the neighbor that comes first in vertex_order is used.
struct MoveSpec {
    MoveKind kind = MoveKind::sign_reversal;
    std::string target;
    std::optional<std::string> neighbor;

    friend bool operator==(const MoveSpec&, const MoveSpec&) = default;
};

std::string move_name(MoveKind kind);
MoveKind parse_move(const std::string& name);

PlumbingGraph sign_reversal(const PlumbingGraph& g, const std::string& v);
PlumbingGraph blow_down_a(const PlumbingGraph& g, const std::string& v);
PlumbingGraph blow_down_b(const PlumbingGraph& g, const std::string& v);
PlumbingGraph zero_chain_absorb(const PlumbingGraph& g, const std::string& v,
                                const std::optional<std::string>& keep = std::nullopt);
PlumbingGraph handle_absorb(const PlumbingGraph& g, const std::string& v);
PlumbingGraph split(const PlumbingGraph& g, const std::string& v,
                    const std::optional<std::string>& leaf = std::nullopt);
PlumbingGraph two_alteration(const PlumbingGraph& g, const std::string& v,
                             const std::optional<std::string>& flip = std::nullopt);

PlumbingGraph apply_move(const PlumbingGraph& g, const MoveSpec& move);

struct ScriptStep {
    MoveSpec move;
    bool input_simple = true;
    bool output_simple = true;
};

struct ScriptResult {
    PlumbingGraph result;
    std::vector<ScriptStep> steps;
};

// Applies the moves in order. Each step records whether it left or entered
// the simple-graph world, where homology is defined.
ScriptResult run_script(const PlumbingGraph& g, std::span<const MoveSpec> script);

struct Reduction {
    std::vector<MoveSpec> script;
    PlumbingGraph result;
};

// The string or point vertex hosting a pipeline id, e.g. "w1_2" for both
// "w1_2" and "s1:w1_2#0"; nullopt for other ids.
std::optional<std::string> host_point(const std::string& id);

// Collapses inserted strings: repeatedly blows down degree-2 string/point
// vertices of weight +-1 and applies +-2-alteration to those of weight 2
// (flipping toward the neighbor first in vertex_order). Only vertices whose
// host point is in `points` are touched; an empty list means all of them.
Reduction reduce_strings(const PlumbingGraph& g, const std::vector<std::string>& points = {});

// Reduction recipes for closed boundary graphs produced by boundary_graph.
//   generic:     string collapse, then each surviving w_ij gets '-' towards
//                v_i and '+' towards v_j (i < j)
//   pencil:      splitting at the multiple point
//   near_pencil: per-string collapse, 0-chain absorptions, handle absorptions
Reduction reduce_family(const PlumbingGraph& g, const IncidenceData& inc, Family family);

// generic recipe for generic arrangements, then pencil, then near-pencil;
// otherwise reduce_strings.
Reduction standard_reduction(const PlumbingGraph& g, const IncidenceData& inc);

}  // namespace mfb
