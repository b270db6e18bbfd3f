#include "mfb/error.hpp"
#include "mfb/generic_algebra.hpp"
#include "mfb/homology.hpp"
#include "mfb/pipeline.hpp"

#include "oracles.hpp"
#include "paper_matrices.hpp"

#include <doctest.h>

#include <numeric>

using namespace mfb;

namespace {

std::vector<Int> ints(std::initializer_list<long long> xs) {
    std::vector<Int> out;
    for (auto x : xs) out.emplace_back(x);
    return out;
}

ProjLine L(long long a, long long b, long long c, std::size_t label) {
    return ProjLine::from_integers(a, b, c, label);
}

IncidenceData a3() {
    return incidence_from_lines({L(1, 0, 0, 0), L(0, 1, 0, 1), L(0, 0, 1, 2), L(1, -1, 0, 3), L(0, 1, -1, 4),
                                 L(-1, 0, 1, 5)});
}

}  // namespace

TEST_CASE("incidence matrices of the reduced generic graphs are the printed ones") {
    CHECK(incidence_matrix(boundary_graph(generate_family(Family::generic, 2), true)) == printed::A2());
    CHECK(incidence_matrix(boundary_graph(generate_family(Family::generic, 3), true)) == printed::A3());
    CHECK(incidence_matrix(boundary_graph(generate_family(Family::generic, 4), true)) == printed::A4());
}

TEST_CASE("Smith forms of printed matrices") {
    const auto a2 = smith_normal_form(printed::A2());
    CHECK(a2.factors == ints({1, 1}));
    CHECK(a2.corank() == 1);
    const auto a4 = smith_normal_form(printed::A4());
    CHECK(a4.factors == ints({1, 1, 1, 1, 1, 1, 4}));
    CHECK(a4.corank() == 3);
}

TEST_CASE("Smith form edge cases") {
    CHECK(smith_normal_form(IntMatrix(0, 0)).factors.empty());
    CHECK(smith_normal_form(IntMatrix::zeros(3, 2)).corank() == 2);
    CHECK(smith_normal_form(IntMatrix{{6}}).factors == ints({6}));
    CHECK(smith_normal_form(IntMatrix{{-6}}).factors == ints({6}));
    CHECK(smith_normal_form(IntMatrix{{2, 0}, {0, 3}}).factors == ints({1, 6}));
    CHECK(smith_normal_form(IntMatrix{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}).factors == ints({2, 6, 12}));
}

TEST_CASE("property: Smith form agrees with the minor-gcd oracle") {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t r = 1 + trial % 5, c = 1 + (trial / 5) % 5;
        const auto m = oracle::random_matrix(rng, r, c, trial % 2 ? 9 : 3);
        CHECK(smith_normal_form(m).factors == oracle::minor_gcd_factors(m));
    }
}

TEST_CASE("property: Smith form is invariant under row and column permutations") {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 150; ++trial) {
        const std::size_t r = 2 + trial % 6, c = 2 + (trial / 3) % 6;
        const auto m = oracle::random_matrix(rng, r, c, 9);
        std::vector<std::size_t> pr(r), pc(c);
        std::iota(pr.begin(), pr.end(), 0);
        std::iota(pc.begin(), pc.end(), 0);
        std::shuffle(pr.begin(), pr.end(), rng);
        std::shuffle(pc.begin(), pc.end(), rng);
        IntMatrix p(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) p(i, j) = m(pr[i], pc[j]);
        CHECK(smith_normal_form(p).factors == smith_normal_form(m).factors);
    }
}

TEST_CASE("abelian groups") {
    const auto g = AbelianGroup::from_cyclic(2, ints({0, 1, -1, 4, 6, 2}));
    CHECK(g.free_rank == 3);
    CHECK(g.torsion == ints({2, 2, 12}));
    CHECK(g.to_string() == "Z^3 (+) Z_2 (+) Z_2 (+) Z_12");
    CHECK(g.primary_decomposition() == ints({2, 2, 3, 4}));
    CHECK(AbelianGroup::from_cyclic(0, {}).to_string() == "0");
    CHECK(AbelianGroup::from_cyclic(1, {}).to_string() == "Z");
    // Z_4 and Z_2 + Z_2 are different groups
    CHECK_FALSE(AbelianGroup::from_cyclic(0, ints({4})) == AbelianGroup::from_cyclic(0, ints({2, 2})));
    CHECK(AbelianGroup::from_cyclic(0, ints({2, 3})) == AbelianGroup::from_cyclic(0, ints({6})));
}

TEST_CASE("homology of the generic n = 4 boundary is Z^6 + Z_4") {
    const auto h = homology_of_graph(boundary_graph(generate_family(Family::generic, 4)));
    CHECK(h.to_string() == "Z^6 (+) Z_4");
}

TEST_CASE("A3 boundary: Z^19 + Z_2^2") {
    const auto inc = a3();
    const auto expected = AbelianGroup::from_cyclic(19, ints({2, 2}));
    CHECK(homology_of_graph(boundary_graph(inc)) == expected);
    CHECK(homology_of_graph(boundary_graph(inc, true)) == expected);
    CHECK(betti_formula(inc) == 19);
}

TEST_CASE("isolated graphs") {
    for (long long n = 3; n <= 8; ++n) {
        PlumbingGraph one;
        one.add_vertex(Vertex{"c", n - 2, 0, std::nullopt, VertexKind::plain, std::nullopt});
        CHECK(homology_of_graph(one) == AbelianGroup::from_cyclic(2 * n - 3, {}));
        PlumbingGraph zeros;
        for (long long k = 0; k < (n - 1) * (n - 1); ++k) {
            zeros.add_vertex(Vertex{"z" + std::to_string(k), 0, 0, std::nullopt, VertexKind::plain, std::nullopt});
        }
        CHECK(homology_of_graph(zeros) == AbelianGroup::from_cyclic((n - 1) * (n - 1), {}));
    }
}

TEST_CASE("homology refuses non-simple graphs and missing weights") {
    PlumbingGraph g;
    g.add_vertex(Vertex{"i", 0, 3, std::nullopt, VertexKind::plain, std::nullopt});
    g.add_vertex(Vertex{"h", 0, 0, std::nullopt, VertexKind::plain, std::nullopt});
    g.add_edge(Edge{"i", "h", Sign::plus, std::nullopt, false});
    g.add_edge(Edge{"h", "i", Sign::minus, std::nullopt, false});
    try {
        homology_of_graph(g);
        FAIL("expected NonSimpleGraph");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NonSimpleGraph);
        CHECK(std::string(e.what()).find("handle_absorb") != std::string::npos);
    }
    PlumbingGraph h;
    h.add_vertex(Vertex{"i", 0, std::nullopt, std::nullopt, VertexKind::plain, std::nullopt});
    CHECK_THROWS_AS(homology_of_graph(h), Error);
}

TEST_CASE("betti formula and euler characteristic") {
    for (long long n = 2; n <= 10; ++n) {
        const auto gen = generate_family(Family::generic, static_cast<std::size_t>(n));
        CHECK(betti_formula(gen) == n * (n - 1) / 2);
        CHECK(projective_complement_euler(gen) == (n - 2) * (n - 3) / 2);
        const auto pen = generate_family(Family::pencil, static_cast<std::size_t>(n));
        CHECK(betti_formula(pen) == (n - 1) * (n - 1));
        CHECK(projective_complement_euler(pen) == 2 - n);
    }
    // 3 doubles + 4 triples with n = 6
    CHECK(betti_formula(a3()) == 3 * 1 + 4 * (1 + 1 * 3));
}

TEST_CASE("conjecture probe") {
    const auto g5 = probe_conjecture(generate_family(Family::generic, 5));
    CHECK(g5.hypothesis_holds);
    CHECK(g5.torsion_is_zn_chi == true);
    CHECK(g5.orders_divide_n);
    CHECK_FALSE(g5.torsion_free);
    CHECK(g5.h1.torsion == ints({5, 5, 5}));

    const auto a = probe_conjecture(a3());
    CHECK_FALSE(a.hypothesis_holds);
    CHECK_FALSE(a.torsion_is_zn_chi.has_value());
    CHECK(a.h1.torsion == ints({2, 2}));
    CHECK(a.orders_divide_n);

    for (std::size_t n = 2; n <= 7; ++n) {
        const auto p = probe_conjecture(generate_family(Family::pencil, n));
        CHECK(p.torsion_free);
        CHECK(p.pencil_or_near_pencil);
        CHECK(p.part3_consistent);
    }
}

TEST_CASE("property: free rank equals the betti formula on random arrangements") {
    for (std::uint64_t seed = 100; seed < 130; ++seed) {
        const std::size_t n = 4 + seed % 6;
        const auto inc = incidence_from_lines(random_lines(n, 2, seed));
        CHECK(homology_of_graph(boundary_graph(inc)).free_rank == betti_formula(inc));
    }
}

TEST_CASE("property: reduction keeps H1") {
    for (std::uint64_t seed = 200; seed < 215; ++seed) {
        const auto inc = incidence_from_lines(random_lines(4 + seed % 5, 2, seed));
        CHECK(homology_of_graph(boundary_graph(inc)) == homology_of_graph(boundary_graph(inc, true)));
    }
}
