#include "mfb/arrangement.hpp"
#include "mfb/calculus.hpp"
#include "mfb/curve_config.hpp"
#include "mfb/error.hpp"
#include "mfb/graph.hpp"
#include "mfb/io.hpp"
#include "mfb/pipeline.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace mfb;

namespace {

Vertex V(const std::string& id, long long e, long long genus = 0) {
    return Vertex{id, genus, e, std::nullopt, VertexKind::plain, std::nullopt};
}

Edge E(const std::string& a, const std::string& b, Sign s = Sign::minus) {
    return Edge{a, b, s, std::nullopt, false};
}

}  // namespace

TEST_CASE("vertex ids") {
    CHECK(line_id(0) == "v1");
    CHECK(point_id({0, 2, 4}) == "w1_3_5");
    CHECK(string_id("v2", "w1_2", 3) == "s2:w1_2#3");
    CHECK(arrowhead_id(1) == "a2");
}

TEST_CASE("vertex_order on generic n = 3 follows the printed matrix layout") {
    // for odd n the surviving vertex of each string is a string vertex
    // hosted by the point, so compare hosts
    const auto g = boundary_graph(generate_family(Family::generic, 3), true);
    std::vector<std::string> hosts;
    for (const auto& id : vertex_order(g)) hosts.push_back(host_point(id).value_or(id));
    CHECK(hosts == std::vector<std::string>{"v1", "v2", "v3", "w1_2", "w1_3", "w2_3"});
}

TEST_CASE("vertex_order on generic n = 4 gives the ten printed rows") {
    const auto g = boundary_graph(generate_family(Family::generic, 4), true);
    CHECK(vertex_order(g) == std::vector<std::string>{"v1", "v2", "v3", "v4", "w1_2", "w1_3", "w1_4",
                                                      "w2_3", "w2_4", "w3_4"});
}

TEST_CASE("vertex_order places strings after their point and uses natural order") {
    PlumbingGraph g;
    for (const char* id : {"x10", "a1", "s2:w1_2#1", "w1_2", "v2", "s1:w1_2#0", "x9", "v10", "w1_3", "v1"}) {
        g.add_vertex(V(id, 0));
    }
    CHECK(vertex_order(g) == std::vector<std::string>{"v1", "v2", "v10", "w1_2", "s1:w1_2#0", "s2:w1_2#1",
                                                      "w1_3", "a1", "x9", "x10"});
    CHECK(precedes(g, "v2", "v10"));
    CHECK_FALSE(precedes(g, "v10", "v2"));
}

TEST_CASE("graph mutation errors") {
    PlumbingGraph g;
    g.add_vertex(V("p", 1));
    CHECK_THROWS_AS(g.add_vertex(V("p", 2)), Error);
    CHECK_THROWS_AS(g.add_edge(E("p", "q")), Error);
    try {
        g.vertex("zz");
        FAIL("expected UnknownVertex");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::UnknownVertex);
    }
}

TEST_CASE("degree counts loops twice; simple detects loops and parallel edges") {
    PlumbingGraph g;
    g.add_vertex(V("p", 1));
    g.add_vertex(V("q", 1));
    g.add_edge(E("p", "q"));
    CHECK(g.is_simple());
    g.add_edge(E("q", "p", Sign::plus));
    CHECK_FALSE(g.is_simple());
    g.remove_edge(1);
    g.add_edge(E("p", "p"));
    CHECK(g.degree("p") == 3);
    CHECK(g.loop_count("p") == 1);
    CHECK_FALSE(g.is_simple());
}

TEST_CASE("remove_vertex drops incident edges") {
    PlumbingGraph g;
    g.add_vertex(V("p", 1));
    g.add_vertex(V("q", 1));
    g.add_vertex(V("r", 1));
    g.add_edge(E("p", "q"));
    g.add_edge(E("q", "r"));
    g.remove_vertex("q");
    CHECK(g.edges().empty());
    CHECK(g.vertices().size() == 2);
    CHECK(g.contains("r"));
}

TEST_CASE("arrowheads must have degree one") {
    PlumbingGraph g;
    g.add_vertex(V("p", 1));
    g.add_vertex(Vertex{"a1", 0, std::nullopt, 1, VertexKind::arrowhead, std::nullopt});
    CHECK_THROWS_AS(g.validate(), Error);
    g.add_edge(E("p", "a1", Sign::plus));
    CHECK_NOTHROW(g.validate());
    CHECK(g.edges()[0].is_arrow);
    CHECK(g.has_arrowheads());
    CHECK_FALSE(g.is_closed());
}

TEST_CASE("first Betti number of graphs") {
    SUBCASE("subdivided complete graph") {
        for (std::size_t n = 2; n <= 8; ++n) {
            const auto g = boundary_graph(generate_family(Family::generic, n), true);
            const long long expected = static_cast<long long>((n - 1) * (n - 2) / 2);
            CHECK(first_betti_of_graph(g) == expected);
        }
    }
    SUBCASE("two disjoint triangles") {
        PlumbingGraph g;
        for (const char* id : {"a", "b", "c", "d", "e", "f"}) g.add_vertex(V(id, 0));
        g.add_edge(E("a", "b"));
        g.add_edge(E("b", "c"));
        g.add_edge(E("c", "a"));
        g.add_edge(E("d", "e"));
        g.add_edge(E("e", "f"));
        g.add_edge(E("f", "d"));
        CHECK(first_betti_of_graph(g) == 2);
    }
    SUBCASE("arrowheads and arrow edges are ignored") {
        const auto gc = build_gamma_c(generate_family(Family::pencil, 4));
        CHECK(first_betti_of_graph(gc) == 0);
    }
}

TEST_CASE("DOT export of generic n = 2") {
    const auto g = boundary_graph(generate_family(Family::generic, 2), true);
    CHECK(g.vertices().size() == 3);
    CHECK(g.edges().size() == 2);
    const std::string dot = to_dot(g);
    CHECK(dot.rfind("graph plumbing {", 0) == 0);
    CHECK(dot.find("\"v1\" -- \"w1_2\"") != std::string::npos);
    CHECK(dot.find("label=\"-\"") != std::string::npos);
    CHECK(dot.find("label=\"+\"") != std::string::npos);
    // deterministic
    CHECK(dot == to_dot(g));
}

TEST_CASE("kind names round-trip") {
    for (auto k : {VertexKind::line, VertexKind::point, VertexKind::string, VertexKind::arrowhead,
                   VertexKind::plain}) {
        CHECK(parse_kind(kind_name(k)) == k);
    }
    CHECK_THROWS_AS(parse_kind("vertex"), Error);
}

TEST_CASE("property: JSON round-trip preserves graphs and vertex_order") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        auto g = oracle::random_graph(rng, 2 + trial % 12, trial % 4);
        if (trial % 3 == 0) g.vertex("x0").euler.reset();
        if (trial % 5 == 0) g.vertex("x1").multiplicity = 3;
        const auto back = graph_from_json(Json::parse(graph_to_json(g).dump()));
        CHECK(back == g);
        CHECK(vertex_order(back) == vertex_order(g));
    }
    for (std::size_t n = 2; n <= 6; ++n) {
        const auto gc = build_gamma_c(generate_family(Family::near_pencil, n + 1));
        CHECK(graph_from_json(graph_to_json(gc)) == gc);
        const auto raw = boundary_graph(generate_family(Family::generic, n));
        CHECK(graph_from_json(graph_to_json(raw)) == raw);
    }
}

TEST_CASE("property: vertex_order is a strict total order") {
    const auto g = boundary_graph(incidence_from_lines(random_lines(7, 2, 3)));
    const auto order = vertex_order(g);
    for (std::size_t i = 0; i < order.size(); ++i) {
        CHECK_FALSE(precedes(g, order[i], order[i]));
        for (std::size_t j = i + 1; j < order.size(); ++j) {
            CHECK(precedes(g, order[i], order[j]));
            CHECK_FALSE(precedes(g, order[j], order[i]));
        }
    }
}
