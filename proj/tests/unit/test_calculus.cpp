#include "mfb/calculus.hpp"
#include "mfb/error.hpp"
#include "mfb/homology.hpp"
#include "mfb/pipeline.hpp"

#include "move_sampler.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <map>

using namespace mfb;

namespace {

Vertex V(const std::string& id, long long e, long long genus = 0) {
    return Vertex{id, genus, e, std::nullopt, VertexKind::plain, std::nullopt};
}

Edge E(const std::string& a, const std::string& b, Sign s) { return Edge{a, b, s, std::nullopt, false}; }

constexpr Sign P = Sign::plus;
constexpr Sign M = Sign::minus;

// Path x0 - x1 - ... with the given weights and signs.
PlumbingGraph path(const std::vector<long long>& weights, const std::vector<Sign>& signs) {
    PlumbingGraph g;
    for (std::size_t i = 0; i < weights.size(); ++i) g.add_vertex(V("x" + std::to_string(i), weights[i]));
    for (std::size_t i = 0; i < signs.size(); ++i) {
        g.add_edge(E("x" + std::to_string(i), "x" + std::to_string(i + 1), signs[i]));
    }
    return g;
}

Sign sign_between(const PlumbingGraph& g, const std::string& a, const std::string& b) {
    for (const auto& e : g.edges()) {
        if (e.touches(a) && e.touches(b) && !e.is_loop()) return e.sign;
    }
    FAIL("no edge " << a << " -- " << b);
    return P;
}

ErrorCode code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    return ErrorCode::ParseError;
}

}  // namespace

TEST_CASE("sign_reversal negates every edge at the vertex") {
    auto g = path({1, 2, 3}, {M, P});
    const auto r = sign_reversal(g, "x1");
    CHECK(sign_between(r, "x0", "x1") == P);
    CHECK(sign_between(r, "x1", "x2") == M);
    CHECK(sign_reversal(r, "x1") == g);
}

TEST_CASE("blow_down_a") {
    auto g = path({5, 1}, {M});
    CHECK(blow_down_a(g, "x1").vertex("x0").euler == 4);
    g = path({0, -1}, {P});
    CHECK(blow_down_a(g, "x1").vertex("x0").euler == 1);
    PlumbingGraph h;
    h.add_vertex(V("a", 3));
    h.add_vertex(V("b", 1, 1));
    h.add_edge(E("a", "b", M));
    CHECK(code_of([&] { blow_down_a(h, "b"); }) == ErrorCode::NotBlowdownable);
}

TEST_CASE("blow_down_b") {
    auto r = blow_down_b(path({3, 1, 5}, {M, M}), "x1");
    CHECK(r.vertex("x0").euler == 2);
    CHECK(r.vertex("x2").euler == 4);
    CHECK(sign_between(r, "x0", "x2") == M);

    r = blow_down_b(path({0, -1, 0}, {P, P}), "x1");
    CHECK(r.vertex("x0").euler == 1);
    CHECK(r.vertex("x2").euler == 1);
    CHECK(sign_between(r, "x0", "x2") == P);

    CHECK(code_of([] { blow_down_b(path({3, 2, 5}, {M, M}), "x1"); }) == ErrorCode::NotBlowdownable);
}

TEST_CASE("zero_chain_absorb follows the -eps*epsbar rule") {
    // (a) -[-]- (0) -[+]- (b), b with two more neighbors
    PlumbingGraph g = path({4, 0, 7}, {M, P});
    g.add_vertex(V("y", 1));
    g.add_vertex(V("z", 2));
    g.add_edge(E("x2", "y", P));
    g.add_edge(E("x2", "z", M));
    const auto r = zero_chain_absorb(g, "x1", std::string("x0"));
    CHECK_FALSE(r.contains("x1"));
    CHECK_FALSE(r.contains("x2"));
    CHECK(r.vertex("x0").euler == 11);
    // -(-1)(+1) = +1: j-side signs stay
    CHECK(sign_between(r, "x0", "y") == P);
    CHECK(sign_between(r, "x0", "z") == M);

    // equal signs on the chain flip the j side
    PlumbingGraph h = path({4, 0, 7}, {M, M});
    h.add_vertex(V("y", 1));
    h.add_edge(E("x2", "y", P));
    h.add_edge(E("x0", "x0", P));
    h.add_edge(E("x2", "x2", M));
    const auto s = zero_chain_absorb(h, "x1", std::string("x0"));
    CHECK(sign_between(s, "x0", "y") == M);
    // loops keep their sign
    std::multiset<int> loops;
    for (const auto& e : s.edges())
        if (e.is_loop()) loops.insert(to_int(e.sign));
    CHECK(loops == std::multiset<int>{-1, 1});
}

TEST_CASE("zero_chain_absorb sums weights and genera, and makes loops of i--j edges") {
    auto g = path({-1, 0, 1}, {P, M});
    const auto r = zero_chain_absorb(g, "x1");
    CHECK(r.vertices().size() == 1);
    CHECK(r.vertex("x0").euler == 0);

    PlumbingGraph t;
    t.add_vertex(V("i", 2, 1));
    t.add_vertex(V("c", 0));
    t.add_vertex(V("j", 3, 2));
    t.add_edge(E("i", "c", M));
    t.add_edge(E("c", "j", M));
    t.add_edge(E("i", "j", P));
    const auto u = zero_chain_absorb(t, "c", std::string("i"));
    CHECK(u.vertex("i").genus == 3);
    CHECK(u.loop_count("i") == 1);
    CHECK_FALSE(u.is_simple());

    CHECK(code_of([] { zero_chain_absorb(path({1, 1, 1}, {P, P}), "x1"); }) == ErrorCode::NotAbsorbable);
}

TEST_CASE("handle_absorb") {
    PlumbingGraph g;
    g.add_vertex(V("i", 3));
    g.add_vertex(V("h", 0));
    g.add_edge(E("i", "h", P));
    g.add_edge(E("h", "i", M));
    const auto r = handle_absorb(g, "h");
    CHECK(r.vertices().size() == 1);
    CHECK(r.vertex("i").genus == 1);
    CHECK(r.vertex("i").euler == 3);

    PlumbingGraph bad = g;
    bad.mutable_edges()[1].sign = P;
    CHECK(code_of([&] { handle_absorb(bad, "h"); }) == ErrorCode::NotAbsorbable);
}

TEST_CASE("split") {
    SUBCASE("two single-edge trees, no extra vertices") {
        PlumbingGraph g;
        for (const char* id : {"c", "z", "a", "a2", "b"}) g.add_vertex(V(id, 3));
        g.vertex("z").euler = 0;
        g.add_edge(E("c", "z", M));
        g.add_edge(E("c", "a", M));
        g.add_edge(E("a", "a2", P));
        g.add_edge(E("c", "b", P));
        const auto r = split(g, "c");
        CHECK(r.vertices().size() == 3);
        CHECK(r.edges().size() == 1);
        CHECK(r.contains("a2"));
    }
    SUBCASE("genus one centre adds two zero vertices") {
        PlumbingGraph g;
        g.add_vertex(V("c", -2, 1));
        g.add_vertex(V("z", 0));
        g.add_vertex(V("a", 1));
        g.add_edge(E("c", "z", M));
        g.add_edge(E("c", "a", M));
        const auto r = split(g, "c");
        CHECK(r.vertices().size() == 3);
        int zeros = 0;
        for (const auto& v : r.vertices()) zeros += v.euler == 0;
        CHECK(zeros == 2);
    }
    SUBCASE("k edges into one component add k - 1") {
        PlumbingGraph g;
        for (const char* id : {"c", "z", "a", "b"}) g.add_vertex(V(id, 1));
        g.vertex("z").euler = 0;
        g.add_edge(E("c", "z", P));
        g.add_edge(E("c", "a", M));
        g.add_edge(E("c", "b", M));
        g.add_edge(E("a", "b", P));
        CHECK(split(g, "c").vertices().size() == 3);
    }
    SUBCASE("pencil star splits into (n - 1)^2 zero vertices") {
        for (std::size_t n = 2; n <= 8; ++n) {
            const auto inc = generate_family(Family::pencil, n);
            const auto r = reduce_family(boundary_graph(inc), inc, Family::pencil).result;
            CHECK(r.vertices().size() == (n - 1) * (n - 1));
            CHECK(r.edges().empty());
            for (const auto& v : r.vertices()) {
                CHECK(v.euler == 0);
                CHECK(v.genus == 0);
            }
        }
    }
    SUBCASE("no zero leaf") {
        CHECK(code_of([] { split(path({1, 1}, {P}), "x0"); }) == ErrorCode::NotSplittable);
    }
}

TEST_CASE("two_alteration") {
    const auto r = two_alteration(path({5, 2, 5}, {P, P}), "x1");
    CHECK(r.vertex("x0").euler == 4);
    CHECK(r.vertex("x1").euler == -2);
    CHECK(r.vertex("x2").euler == 4);
    CHECK(sign_between(r, "x0", "x1") == M);
    CHECK(sign_between(r, "x1", "x2") == P);
    CHECK(code_of([] { two_alteration(path({5, 3, 5}, {P, P}), "x1"); }) == ErrorCode::NotApplicable);
}

TEST_CASE("two_alteration on the A3 triple-point piece") {
    // centre [1] weight 3, three strings of weight 2, line ends of weight -2
    PlumbingGraph g;
    g.add_vertex(V("c", 3, 1));
    for (int k = 0; k < 3; ++k) {
        const std::string s = "s" + std::to_string(k), l = "l" + std::to_string(k);
        g.add_vertex(V(s, 2));
        g.add_vertex(V(l, -2));
        g.add_edge(E("c", s, M));
        g.add_edge(E(s, l, M));
    }
    PlumbingGraph r = g;
    for (int k = 0; k < 3; ++k) {
        const std::string s = "s" + std::to_string(k);
        r = two_alteration(r, s, "l" + std::to_string(k));
    }
    CHECK(r.vertex("c").euler == 0);
    CHECK(r.vertex("c").genus == 1);
    for (int k = 0; k < 3; ++k) {
        const std::string s = "s" + std::to_string(k), l = "l" + std::to_string(k);
        CHECK(r.vertex(s).euler == -2);
        // the local rule lowers the flipped neighbour by one
        CHECK(r.vertex(l).euler == -3);
        CHECK(sign_between(r, "c", s) == M);
        CHECK(sign_between(r, s, l) == P);
    }
}

TEST_CASE("two_alteration equals blow-up then blow-down") {
    std::mt19937_64 rng(3);
    int checked = 0;
    for (int trial = 0; trial < 200; ++trial) {
        PlumbingGraph g = oracle::random_graph(rng, 3 + trial % 6, trial % 3);
        // put a weight-2 vertex between x0 and some neighbour
        const auto inc = g.incident_edges("x0");
        if (inc.empty()) continue;
        const Edge old = g.edges()[inc[0]];
        const std::string other = old.other("x0");
        g.remove_edge(inc[0]);
        g.add_vertex(V("t", 2));
        g.add_edge(E("x0", "t", trial % 2 ? P : M));
        g.add_edge(E("t", other, trial % 3 ? M : P));

        const Sign eps1 = sign_between(g, "x0", "t");
        const auto expected = two_alteration(g, "t", std::string("x0"));

        std::size_t edge = 0;
        for (std::size_t i = 0; i < g.edges().size(); ++i) {
            if (g.edges()[i].touches("t") && g.edges()[i].touches("x0")) edge = i;
        }
        // u of weight -1 between x0 and t with alpha = -eps1, then blow t down
        auto blown = oracle::blow_up_edge(g, edge, "u", -1, -eps1);
        blown = blow_down_b(blown, "t");
        blown = oracle::rename(blown, "u", "t");
        CHECK(canonical_layout(blown) == canonical_layout(expected));
        ++checked;
    }
    CHECK(checked > 100);
}

TEST_CASE("blow_down_b undoes a blow-up") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 200; ++trial) {
        const PlumbingGraph g = oracle::random_graph(rng, 2 + trial % 7, trial % 3);
        const std::size_t edge = std::uniform_int_distribution<std::size_t>(0, g.edges().size() - 1)(rng);
        const long long eps = trial % 2 ? 1 : -1;
        const auto up = oracle::blow_up_edge(g, edge, "u", eps, trial % 3 ? P : M);
        CHECK(canonical_layout(blow_down_b(up, "u")) == canonical_layout(g));
    }
}

TEST_CASE("run_script records transitions out of simple graphs") {
    PlumbingGraph g;
    g.add_vertex(V("i", 3));
    g.add_vertex(V("h", 0));
    g.add_vertex(V("j", 1));
    g.add_vertex(V("k", 2));
    g.add_edge(E("i", "h", P));
    g.add_edge(E("h", "j", P));
    g.add_edge(E("i", "k", M));
    g.add_edge(E("k", "j", P));
    const std::vector<MoveSpec> script{{MoveKind::zero_chain_absorb, "h", std::string("i")}};
    const auto r = run_script(g, script);
    REQUIRE(r.steps.size() == 1);
    CHECK(r.steps[0].input_simple);
    CHECK_FALSE(r.steps[0].output_simple);
}

TEST_CASE("move names round-trip") {
    for (auto k : {MoveKind::sign_reversal, MoveKind::blow_down_a, MoveKind::blow_down_b,
                   MoveKind::zero_chain_absorb, MoveKind::handle_absorb, MoveKind::split,
                   MoveKind::two_alteration}) {
        CHECK(parse_move(move_name(k)) == k);
    }
    CHECK_THROWS_AS(parse_move("blow_up"), Error);
}

TEST_CASE("host_point") {
    CHECK(host_point("w1_2") == "w1_2");
    CHECK(host_point("s3:w1_3#2") == "w1_3");
    CHECK_FALSE(host_point("v1").has_value());
    CHECK_FALSE(host_point("w1_2#z0").has_value());
}

TEST_CASE("near-pencil reduction ends at one vertex of genus n - 2") {
    for (std::size_t n = 3; n <= 10; ++n) {
        const auto inc = generate_family(Family::near_pencil, n);
        const auto r = reduce_family(boundary_graph(inc), inc, Family::near_pencil);
        REQUIRE(r.result.vertices().size() == 1);
        CHECK(r.result.vertices()[0].euler == 0);
        CHECK(r.result.vertices()[0].genus == static_cast<long long>(n) - 2);
        CHECK(r.result.edges().empty());
    }
}

TEST_CASE("reduce_family rejects the wrong family") {
    const auto inc = generate_family(Family::pencil, 5);
    CHECK_THROWS_AS(reduce_family(boundary_graph(inc), inc, Family::generic), Error);
}

TEST_CASE("property: H1 is unchanged by moves between simple graphs") {
    std::mt19937_64 rng(2024);
    int checked = 0;
    std::map<MoveKind, int> per_kind;
    for (int trial = 0; trial < 400; ++trial) {
        const auto g = oracle::plant_patterns(rng, oracle::random_graph(rng, 2 + trial % 8, trial % 3));
        if (!g.is_simple()) continue;
        const auto moves = oracle::applicable_moves(g);
        const auto before = homology_of_graph(g);
        for (const auto& m : moves) {
            const auto after_graph = apply_move(g, m);
            if (!after_graph.is_simple()) continue;
            CHECK_MESSAGE(homology_of_graph(after_graph) == before, move_name(m.kind) << " at " << m.target);
            ++checked;
            ++per_kind[m.kind];
        }
    }
    CHECK(checked >= 500);
    for (auto k : {MoveKind::sign_reversal, MoveKind::blow_down_a, MoveKind::blow_down_b,
                   MoveKind::zero_chain_absorb, MoveKind::split, MoveKind::two_alteration}) {
        CHECK_MESSAGE(per_kind[k] > 10, move_name(k));
    }
}
