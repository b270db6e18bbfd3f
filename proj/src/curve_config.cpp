#include "mfb/curve_config.hpp"

#include "mfb/error.hpp"

namespace mfb {

PlumbingGraph build_gamma_c(const IncidenceData& input) {
    if (input.n < 2) throw Error(ErrorCode::InvalidIncidence, "need at least two lines");
    const IncidenceData inc = IncidenceData::validated(input.n, input.points);
    const auto n = static_cast<long long>(inc.n);

    PlumbingGraph g;
    for (std::size_t i = 0; i < inc.n; ++i) {
        g.add_vertex(Vertex{line_id(i), 0, std::nullopt, std::nullopt, VertexKind::line,
                            Decoration{1, n, 1}});
    }
    for (const auto& p : inc.points) {
        const auto m = static_cast<long long>(p.multiplicity());
        const std::string w = point_id(p.lines);
        g.add_vertex(Vertex{w, 0, std::nullopt, std::nullopt, VertexKind::point,
                            Decoration{m, n, 1}});
        for (std::size_t line : p.lines) {
            g.add_edge(Edge{line_id(line), w, Sign::plus, 2, false});
        }
    }
    for (std::size_t i = 0; i < inc.n; ++i) {
        g.add_vertex(Vertex{arrowhead_id(i), 0, std::nullopt, std::nullopt,
                            VertexKind::arrowhead, Decoration{1, 0, 1}});
        g.add_edge(Edge{line_id(i), arrowhead_id(i), Sign::plus, 1, true});
    }
    return g;
}

}  // namespace mfb
