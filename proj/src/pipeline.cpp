#include "mfb/pipeline.hpp"

#include "mfb/calculus.hpp"
#include "mfb/curve_config.hpp"
#include "mfb/error.hpp"
#include "mfb/strings.hpp"

#include <numeric>

namespace mfb {

PlumbingGraph decorate_and_insert(const PlumbingGraph& gc) {
    long long n = 0;
    for (const auto& v : gc.vertices()) {
        if (v.kind == VertexKind::line && v.decoration) n = v.decoration->n;
    }
    if (n < 2) throw Error(ErrorCode::InvalidInput, "curve configuration graph has no n >= 2");

    PlumbingGraph out;
    for (const auto& v : gc.vertices()) {
        Vertex d{v.id, 0, std::nullopt, std::nullopt, v.kind, std::nullopt};
        switch (v.kind) {
            case VertexKind::line:
            case VertexKind::arrowhead:
                d.multiplicity = 1;
                break;
            case VertexKind::point: {
                if (!v.decoration) {
                    throw Error(ErrorCode::InvalidInput, "point vertex '" + v.id + "' lacks (m;n,nu)");
                }
                const long long m = v.decoration->m;
                const long long g = std::gcd(m, n);
                d.genus = (m - 2) * (g - 1) / 2;
                d.multiplicity = m / g;
                break;
            }
            default:
                throw Error(ErrorCode::InvalidInput,
                            "unexpected vertex '" + v.id + "' in curve configuration graph");
        }
        out.add_vertex(std::move(d));
    }

    for (const auto& e : gc.edges()) {
        if (e.is_arrow) {
            out.add_edge(Edge{e.a, e.b, Sign::plus, std::nullopt, true});
            continue;
        }
        const bool a_is_line = gc.vertex(e.a).kind == VertexKind::line;
        const Vertex& line = gc.vertex(a_is_line ? e.a : e.b);
        const Vertex& point = gc.vertex(a_is_line ? e.b : e.a);
        if (line.kind != VertexKind::line || point.kind != VertexKind::point) {
            throw Error(ErrorCode::InvalidInput,
                        "type-2 edge " + e.a + "--" + e.b + " must join a line and a point");
        }
        const StringGraph s = build_string(1, point.decoration->m, n, Sign::minus);
        if (s.end_mults.second != *out.vertex(point.id).multiplicity) {
            throw Error(ErrorCode::InvalidInput, "string end multiplicity disagrees with point '" +
                                                     point.id + "'");
        }
        std::string prev = line.id;
        for (std::size_t t = 0; t < s.interior.size(); ++t) {
            const std::string id = string_id(line.id, point.id, t);
            out.add_vertex(Vertex{id, 0, std::nullopt, s.interior[t], VertexKind::string, {}});
            out.add_edge(Edge{prev, id, Sign::minus, std::nullopt, false});
            prev = id;
        }
        out.add_edge(Edge{prev, point.id, Sign::minus, std::nullopt, false});
    }
    return out;
}

PlumbingGraph solve_euler(const PlumbingGraph& dg) {
    PlumbingGraph out = dg;
    for (const auto& e : dg.edges()) {
        if (e.is_loop()) {
            throw Error(ErrorCode::UnsupportedLoop, "loop at '" + e.a + "' in multiplicity system");
        }
    }
    for (const auto& v : dg.vertices()) {
        if (!v.multiplicity || *v.multiplicity <= 0) {
            throw Error(ErrorCode::InvalidInput, "vertex '" + v.id + "' lacks a positive multiplicity");
        }
    }
    for (const auto& v : dg.vertices()) {
        if (v.is_arrowhead()) continue;
        long long sum = 0;
        for (std::size_t idx : dg.incident_edges(v.id)) {
            const Edge& e = dg.edges()[idx];
            sum += to_int(e.sign) * *dg.vertex(e.other(v.id)).multiplicity;
        }
        const long long m = *v.multiplicity;
        if (sum % m != 0) {
            throw Error(ErrorCode::NonIntegralEuler,
                        "euler number at '" + v.id + "' is not integral");
        }
        out.vertex(v.id).euler = -sum / m;
    }
    return out;
}

bool satisfies_multiplicity_system(const PlumbingGraph& g) {
    for (const auto& v : g.vertices()) {
        if (v.is_arrowhead() || !v.euler || !v.multiplicity) continue;
        long long total = *v.euler * *v.multiplicity;
        for (std::size_t idx : g.incident_edges(v.id)) {
            const Edge& e = g.edges()[idx];
            const auto& other = g.vertex(e.other(v.id));
            if (!other.multiplicity) return false;
            total += to_int(e.sign) * *other.multiplicity;
        }
        if (total != 0) return false;
    }
    return true;
}

PlumbingGraph strip_arrowheads(const PlumbingGraph& g) {
    PlumbingGraph out;
    for (const auto& v : g.vertices()) {
        if (v.is_arrowhead()) continue;
        if (!v.euler) throw Error(ErrorCode::MissingEuler, "vertex '" + v.id + "' has no euler number");
        out.add_vertex(v);
    }
    for (const auto& e : g.edges()) {
        if (out.contains(e.a) && out.contains(e.b)) out.add_edge(e);
    }
    return out;
}

PlumbingGraph boundary_graph(const IncidenceData& inc, bool reduce) {
    const PlumbingGraph closed =
        canonical_layout(strip_arrowheads(solve_euler(decorate_and_insert(build_gamma_c(inc)))));
    if (!reduce) return closed;
    return canonical_layout(standard_reduction(closed, inc).result);
}

}  // namespace mfb
