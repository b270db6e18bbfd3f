#include "mfb/calculus.hpp"

#include "mfb/error.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace mfb {

std::string move_name(MoveKind kind) {
    switch (kind) {
        case MoveKind::sign_reversal: return "sign_reversal";
        case MoveKind::blow_down_a: return "blow_down_a";
        case MoveKind::blow_down_b: return "blow_down_b";
        case MoveKind::zero_chain_absorb: return "zero_chain_absorb";
        case MoveKind::handle_absorb: return "handle_absorb";
        case MoveKind::split: return "split";
        case MoveKind::two_alteration: return "two_alteration";
    }
    return "unknown";
}

MoveKind parse_move(const std::string& name) {
    for (auto kind : {MoveKind::sign_reversal, MoveKind::blow_down_a, MoveKind::blow_down_b,
                      MoveKind::zero_chain_absorb, MoveKind::handle_absorb, MoveKind::split,
                      MoveKind::two_alteration}) {
        if (move_name(kind) == name) return kind;
    }
    throw Error(ErrorCode::ParseError, "unknown move '" + name + "'");
}

namespace {

// The two edges of a degree-2 vertex without loops, joined to distinct
// neighbors.
struct Bivalent {
    std::size_t edge1 = 0, edge2 = 0;
    std::string n1, n2;
};

std::optional<Bivalent> bivalent(const PlumbingGraph& g, const std::string& v) {
    const auto inc = g.incident_edges(v);
    if (inc.size() != 2) return std::nullopt;
    const Edge& e1 = g.edges()[inc[0]];
    const Edge& e2 = g.edges()[inc[1]];
    if (e1.is_loop() || e2.is_loop()) return std::nullopt;
    Bivalent b{inc[0], inc[1], e1.other(v), e2.other(v)};
    if (b.n1 == b.n2) return std::nullopt;
    return b;
}

long long euler_of(const PlumbingGraph& g, const std::string& id) {
    const Vertex& v = g.vertex(id);
    if (!v.euler) throw Error(ErrorCode::MissingEuler, "vertex '" + id + "' has no euler number");
    return *v.euler;
}

// Reorders b so that n1 is `first` when given, else the vertex_order-first one.
void orient(const PlumbingGraph& g, Bivalent& b, const std::optional<std::string>& first,
            ErrorCode code, const std::string& v) {
    if (first) {
        if (*first == b.n2) {
            std::swap(b.n1, b.n2);
            std::swap(b.edge1, b.edge2);
        } else if (*first != b.n1) {
            throw Error(code, "'" + *first + "' is not a neighbor of '" + v + "'");
        }
    } else if (precedes(g, b.n2, b.n1)) {
        std::swap(b.n1, b.n2);
        std::swap(b.edge1, b.edge2);
    }
}

}  // namespace

PlumbingGraph sign_reversal(const PlumbingGraph& g, const std::string& v) {
    g.vertex(v);
    PlumbingGraph out = g;
    for (auto& e : out.mutable_edges()) {
        if (e.touches(v) && !e.is_loop()) e.sign = -e.sign;
    }
    return out;
}

PlumbingGraph blow_down_a(const PlumbingGraph& g, const std::string& v) {
    const Vertex& vert = g.vertex(v);
    const auto inc = g.incident_edges(v);
    if (vert.is_arrowhead() || !vert.euler || (*vert.euler != 1 && *vert.euler != -1) ||
        vert.genus != 0 || inc.size() != 1 || g.edges()[inc[0]].is_loop()) {
        throw Error(ErrorCode::NotBlowdownable,
                    "'" + v + "' is not a genus-0 leaf of weight +-1");
    }
    const long long eps = *vert.euler;
    const std::string u = g.edges()[inc[0]].other(v);
    const long long eu = euler_of(g, u);
    PlumbingGraph out = g;
    out.remove_vertex(v);
    out.vertex(u).euler = eu - eps;
    return out;
}

PlumbingGraph blow_down_b(const PlumbingGraph& g, const std::string& v) {
    const Vertex& vert = g.vertex(v);
    const auto b = bivalent(g, v);
    if (vert.is_arrowhead() || !vert.euler || (*vert.euler != 1 && *vert.euler != -1) ||
        vert.genus != 0 || !b) {
        throw Error(ErrorCode::NotBlowdownable,
                    "'" + v + "' is not a genus-0 weight +-1 vertex between two distinct neighbors");
    }
    const Sign eps = *vert.euler == 1 ? Sign::plus : Sign::minus;
    const Sign s1 = g.edges()[b->edge1].sign;
    const Sign s2 = g.edges()[b->edge2].sign;
    const long long ei = euler_of(g, b->n1);
    const long long ej = euler_of(g, b->n2);
    PlumbingGraph out = g;
    out.remove_vertex(v);
    out.vertex(b->n1).euler = ei - to_int(eps);
    out.vertex(b->n2).euler = ej - to_int(eps);
    out.add_edge(Edge{b->n1, b->n2, -(eps * s1 * s2), std::nullopt, false});
    return out;
}

PlumbingGraph zero_chain_absorb(const PlumbingGraph& g, const std::string& v,
                                const std::optional<std::string>& keep) {
    const Vertex& vert = g.vertex(v);
    auto b = bivalent(g, v);
    if (vert.is_arrowhead() || vert.euler != 0 || vert.genus != 0 || !b) {
        throw Error(ErrorCode::NotAbsorbable,
                    "'" + v + "' is not a genus-0 weight-0 vertex between two distinct neighbors");
    }
    orient(g, *b, keep, ErrorCode::NotAbsorbable, v);
    const std::string i = b->n1;
    const std::string j = b->n2;
    const Sign factor = -(g.edges()[b->edge1].sign * g.edges()[b->edge2].sign);
    const long long ei = euler_of(g, i);
    const long long ej = euler_of(g, j);
    const long long gj = g.vertex(j).genus;

    PlumbingGraph out = g;
    out.remove_vertex(v);
    for (auto& e : out.mutable_edges()) {
        if (!e.touches(j)) continue;
        if (e.is_loop()) {
            e.a = e.b = i;
            continue;
        }
        if (e.a == j) e.a = i;
        if (e.b == j) e.b = i;
        e.sign = e.sign * factor;
    }
    Vertex& merged = out.vertex(i);
    merged.euler = ei + ej;
    merged.genus += gj;
    merged.multiplicity.reset();
    out.remove_vertex(j);
    return out;
}

PlumbingGraph handle_absorb(const PlumbingGraph& g, const std::string& v) {
    const Vertex& vert = g.vertex(v);
    const auto inc = g.incident_edges(v);
    bool ok = !vert.is_arrowhead() && vert.euler == 0 && vert.genus == 0 && inc.size() == 2;
    std::string i;
    if (ok) {
        const Edge& e1 = g.edges()[inc[0]];
        const Edge& e2 = g.edges()[inc[1]];
        i = e1.other(v);
        ok = !e1.is_loop() && !e2.is_loop() && e2.other(v) == i && e1.sign != e2.sign;
    }
    if (!ok) {
        throw Error(ErrorCode::NotAbsorbable,
                    "'" + v + "' is not a weight-0 vertex doubly joined to one vertex by +,-");
    }
    PlumbingGraph out = g;
    out.remove_vertex(v);
    out.vertex(i).genus += 1;
    return out;
}

PlumbingGraph split(const PlumbingGraph& g, const std::string& v,
                    const std::optional<std::string>& leaf) {
    const Vertex& center = g.vertex(v);
    if (center.is_arrowhead() || g.loop_count(v) != 0) {
        throw Error(ErrorCode::NotSplittable, "'" + v + "' cannot be split");
    }
    auto is_zero_leaf = [&](const std::string& u) {
        const Vertex& x = g.vertex(u);
        const auto inc = g.incident_edges(u);
        return !x.is_arrowhead() && x.euler == 0 && x.genus == 0 && inc.size() == 1 &&
               g.edges()[inc[0]].other(u) == v && u != v;
    };
    std::optional<std::string> chosen;
    if (leaf) {
        if (!g.contains(*leaf) || !is_zero_leaf(*leaf)) {
            throw Error(ErrorCode::NotSplittable,
                        "'" + *leaf + "' is not a weight-0 leaf attached to '" + v + "'");
        }
        chosen = leaf;
    } else {
        for (std::size_t idx : g.incident_edges(v)) {
            const std::string u = g.edges()[idx].other(v);
            if (is_zero_leaf(u) && (!chosen || precedes(g, u, *chosen))) chosen = u;
        }
        if (!chosen) throw Error(ErrorCode::NotSplittable, "'" + v + "' has no weight-0 leaf");
    }

    PlumbingGraph out = g;
    out.remove_vertex(*chosen);
    std::vector<std::string> attached;
    for (std::size_t idx : out.incident_edges(v)) attached.push_back(out.edges()[idx].other(v));
    out.remove_vertex(v);

    // components of what remains, to count the k_j
    std::unordered_map<std::string, std::size_t> index;
    for (const auto& x : out.vertices()) index.emplace(x.id, index.size());
    std::vector<std::size_t> parent(index.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& e : out.edges()) parent[find(index.at(e.a))] = find(index.at(e.b));
    std::map<std::size_t, long long> edges_to;
    for (const auto& u : attached) ++edges_to[find(index.at(u))];

    long long copies = 2 * center.genus;
    for (const auto& [component, k] : edges_to) copies += k - 1;
    long long serial = 0;
    for (long long c = 0; c < copies; ++c) {
        std::string id;
        do {
            id = v + "#z" + std::to_string(serial++);
        } while (out.contains(id));
        out.add_vertex(Vertex{id, 0, 0, std::nullopt, VertexKind::plain, std::nullopt});
    }
    return out;
}

PlumbingGraph two_alteration(const PlumbingGraph& g, const std::string& v,
                             const std::optional<std::string>& flip) {
    const Vertex& vert = g.vertex(v);
    auto b = bivalent(g, v);
    if (vert.is_arrowhead() || vert.euler != 2 || vert.genus != 0 || !b) {
        throw Error(ErrorCode::NotApplicable,
                    "'" + v + "' is not a genus-0 weight-2 vertex between two distinct neighbors");
    }
    orient(g, *b, flip, ErrorCode::NotApplicable, v);
    const long long ei = euler_of(g, b->n1);
    const long long ej = euler_of(g, b->n2);
    PlumbingGraph out = g;
    out.vertex(v).euler = -2;
    out.mutable_edges()[b->edge1].sign = -out.edges()[b->edge1].sign;
    out.vertex(b->n1).euler = ei - 1;
    out.vertex(b->n2).euler = ej - 1;
    return out;
}

PlumbingGraph apply_move(const PlumbingGraph& g, const MoveSpec& m) {
    switch (m.kind) {
        case MoveKind::sign_reversal: return sign_reversal(g, m.target);
        case MoveKind::blow_down_a: return blow_down_a(g, m.target);
        case MoveKind::blow_down_b: return blow_down_b(g, m.target);
        case MoveKind::zero_chain_absorb: return zero_chain_absorb(g, m.target, m.neighbor);
        case MoveKind::handle_absorb: return handle_absorb(g, m.target);
        case MoveKind::split: return split(g, m.target, m.neighbor);
        case MoveKind::two_alteration: return two_alteration(g, m.target, m.neighbor);
    }
    throw Error(ErrorCode::InvalidInput, "unknown move");
}

ScriptResult run_script(const PlumbingGraph& g, std::span<const MoveSpec> script) {
    ScriptResult r{g, {}};
    for (const auto& move : script) {
        ScriptStep step{move, r.result.is_simple(), true};
        r.result = apply_move(r.result, move);
        step.output_simple = r.result.is_simple();
        r.steps.push_back(std::move(step));
    }
    return r;
}

std::optional<std::string> host_point(const std::string& id) {
    if (id.size() > 1 && id[0] == 'w' && id.find('#') == std::string::npos) return id;
    if (id.size() > 1 && id[0] == 's') {
        const auto colon = id.find(':');
        const auto hash = id.rfind('#');
        if (colon != std::string::npos && hash != std::string::npos && colon < hash) {
            return id.substr(colon + 1, hash - colon - 1);
        }
    }
    return std::nullopt;
}

namespace {

void apply_step(Reduction& r, MoveSpec move) {
    r.result = apply_move(r.result, move);
    r.script.push_back(std::move(move));
}

}  // namespace

Reduction reduce_strings(const PlumbingGraph& g, const std::vector<std::string>& points) {
    Reduction r{{}, g};
    const std::set<std::string> wanted(points.begin(), points.end());
    const auto order = vertex_order(g);
    std::vector<std::string> eligible;
    for (const auto& id : order) {
        const auto host = host_point(id);
        const auto kind = g.vertex(id).kind;
        if (host && (kind == VertexKind::string || kind == VertexKind::point) &&
            (wanted.empty() || wanted.contains(*host))) {
            eligible.push_back(id);
        }
    }
    std::unordered_map<std::string, std::size_t> rank;
    for (std::size_t i = 0; i < order.size(); ++i) rank.emplace(order[i], i);

    while (true) {
        std::unordered_map<std::string, std::vector<std::size_t>> incident;
        for (std::size_t i = 0; i < r.result.edges().size(); ++i) {
            const Edge& e = r.result.edges()[i];
            incident[e.a].push_back(i);
            if (!e.is_loop()) incident[e.b].push_back(i);
        }
        auto neighbors = [&](const std::string& id) -> std::optional<std::pair<std::string, std::string>> {
            const auto it = incident.find(id);
            if (it == incident.end() || it->second.size() != 2) return std::nullopt;
            const Edge& e1 = r.result.edges()[it->second[0]];
            const Edge& e2 = r.result.edges()[it->second[1]];
            if (e1.is_loop() || e2.is_loop() || e1.other(id) == e2.other(id)) return std::nullopt;
            return std::make_pair(e1.other(id), e2.other(id));
        };
        std::optional<MoveSpec> blow, alter;
        for (const auto& id : eligible) {
            if (!r.result.contains(id)) continue;
            const Vertex& v = r.result.vertex(id);
            if (v.genus != 0 || !v.euler) continue;
            const long long e = *v.euler;
            if (e != 1 && e != -1 && e != 2) continue;
            const auto nb = neighbors(id);
            if (!nb) continue;
            if (e != 2) {
                blow = MoveSpec{MoveKind::blow_down_b, id, std::nullopt};
                break;
            }
            if (!alter) {
                const std::string& first =
                    rank.at(nb->first) < rank.at(nb->second) ? nb->first : nb->second;
                alter = MoveSpec{MoveKind::two_alteration, id, first};
            }
        }
        if (blow) apply_step(r, *blow);
        else if (alter) apply_step(r, *alter);
        else break;
    }
    return r;
}

namespace {

void append(Reduction& into, Reduction&& part) {
    into.result = std::move(part.result);
    into.script.insert(into.script.end(), part.script.begin(), part.script.end());
}

std::string first_of(const PlumbingGraph& g, std::vector<std::string> ids) {
    return *std::min_element(ids.begin(), ids.end(), [&](const std::string& a, const std::string& b) {
        return precedes(g, a, b);
    });
}

std::vector<std::string> neighbor_ids(const PlumbingGraph& g, const std::string& v) {
    std::vector<std::string> out;
    for (std::size_t idx : g.incident_edges(v)) out.push_back(g.edges()[idx].other(v));
    return out;
}

Reduction reduce_generic(const PlumbingGraph& g, const IncidenceData& inc) {
    Reduction r = reduce_strings(g);
    for (const auto& p : inc.points) {
        const std::string host = point_id(p.lines);
        std::vector<std::string> survivors;
        for (const auto& v : r.result.vertices()) {
            if (host_point(v.id) == host) survivors.push_back(v.id);
        }
        if (survivors.size() != 1) {
            throw Error(ErrorCode::InvalidInput, "string at '" + host + "' did not collapse");
        }
        const std::string& x = survivors.front();
        const std::string low = line_id(p.lines[0]);
        for (std::size_t idx : r.result.incident_edges(x)) {
            const Edge& e = r.result.edges()[idx];
            if (e.other(x) == low && e.sign == Sign::plus) {
                apply_step(r, MoveSpec{MoveKind::sign_reversal, x, std::nullopt});
                break;
            }
        }
    }
    return r;
}

Reduction reduce_pencil(const PlumbingGraph& g, const IncidenceData& inc) {
    Reduction r{{}, g};
    apply_step(r, MoveSpec{MoveKind::split, point_id(inc.points.front().lines), line_id(0)});
    return r;
}

Reduction reduce_near_pencil(const PlumbingGraph& g, const IncidenceData& inc) {
    const auto big = std::find_if(inc.points.begin(), inc.points.end(), [&](const MultiPoint& p) {
        return p.multiplicity() == inc.n - 1;
    });
    std::size_t transversal = 0;
    while (std::binary_search(big->lines.begin(), big->lines.end(), transversal)) ++transversal;

    Reduction r{{}, g};
    for (std::size_t j : big->lines) {
        const auto pair = std::minmax(transversal, j);
        append(r, reduce_strings(r.result, {point_id({pair.first, pair.second})}));
    }
    for (std::size_t j : big->lines) {
        const std::string lj = line_id(j);
        apply_step(r, MoveSpec{MoveKind::zero_chain_absorb, lj,
                               first_of(r.result, neighbor_ids(r.result, lj))});
    }
    const std::string lt = line_id(transversal);
    const auto chains = neighbor_ids(r.result, lt);
    const std::string first = first_of(r.result, chains);
    apply_step(r, MoveSpec{MoveKind::zero_chain_absorb, first, lt});
    for (const auto& v : neighbor_ids(r.result, lt)) {
        if (r.result.contains(v) && v != lt) {
            apply_step(r, MoveSpec{MoveKind::handle_absorb, v, std::nullopt});
        }
    }
    return r;
}

}  // namespace

Reduction reduce_family(const PlumbingGraph& g, const IncidenceData& inc, Family family) {
    switch (family) {
        case Family::generic:
            if (!is_generic(inc)) throw Error(ErrorCode::InvalidInput, "arrangement is not generic");
            return reduce_generic(g, inc);
        case Family::pencil:
            if (!is_pencil(inc)) throw Error(ErrorCode::InvalidInput, "arrangement is not a pencil");
            return reduce_pencil(g, inc);
        case Family::near_pencil:
            if (!is_near_pencil(inc)) {
                throw Error(ErrorCode::InvalidInput, "arrangement is not a near-pencil");
            }
            return reduce_near_pencil(g, inc);
    }
    throw Error(ErrorCode::InvalidInput, "unknown family");
}

Reduction standard_reduction(const PlumbingGraph& g, const IncidenceData& inc) {
    if (is_generic(inc)) return reduce_family(g, inc, Family::generic);
    if (is_pencil(inc)) return reduce_family(g, inc, Family::pencil);
    if (is_near_pencil(inc)) return reduce_family(g, inc, Family::near_pencil);
    return reduce_strings(g);
}

}  // namespace mfb
