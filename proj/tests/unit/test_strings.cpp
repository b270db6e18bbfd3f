#include "mfb/error.hpp"
#include "mfb/strings.hpp"

#include "oracles.hpp"

#include <doctest.h>

using namespace mfb;

TEST_CASE("lambda equation: printed examples") {
    for (long long n = 2; n <= 12; ++n) {
        CHECK(solve_lambda(1, n, n) == LambdaSolution{0, 1});
        CHECK(solve_lambda(1, n - 1, n) == LambdaSolution{1, 1});
    }
    CHECK(solve_lambda(1, 2, 6) == LambdaSolution{4, 1});
}

TEST_CASE("lambda equation agrees with exhaustive search") {
    for (long long a = 1; a <= 7; ++a)
        for (long long b = 1; b <= 9; ++b)
            for (long long c = 1; c <= 12; ++c) {
                if (std::gcd(std::gcd(a, b), c) != 1) {
                    CHECK_THROWS_AS(solve_lambda(a, b, c), Error);
                    continue;
                }
                const auto expected = oracle::lambda_search(a, b, c);
                if (!expected) {
                    CHECK_THROWS_AS(solve_lambda(a, b, c), Error);
                    continue;
                }
                const auto got = solve_lambda(a, b, c);
                CHECK(got.lambda == expected->first);
                CHECK(got.m1 == expected->second);
            }
}

TEST_CASE("lambda rejects nonpositive input") {
    CHECK_THROWS_AS(solve_lambda(0, 1, 1), Error);
    CHECK_THROWS_AS(solve_lambda(1, -1, 2), Error);
}

TEST_CASE("negative continued fractions") {
    for (long long n = 2; n <= 12; ++n) CHECK(hj_continued_fraction(n, 1) == std::vector<long long>{n});
    for (long long k = 2; k <= 8; ++k) {
        CHECK(hj_continued_fraction(2 * k, 2 * k - 2) == std::vector<long long>(static_cast<std::size_t>(k - 1), 2));
    }
    CHECK(hj_continued_fraction(5, 3) == std::vector<long long>{2, 3});
    CHECK(evaluate_hj({2, 3}) == Rational(5, 3));
    CHECK_THROWS_AS(hj_continued_fraction(3, 3), Error);
    CHECK_THROWS_AS(hj_continued_fraction(3, 0), Error);
}

TEST_CASE("property: continued fractions reconstruct p / q with all terms >= 2") {
    for (long long p = 2; p <= 60; ++p)
        for (long long q = 1; q < p; ++q) {
            const auto terms = hj_continued_fraction(p, q);
            for (long long k : terms) CHECK(k >= 2);
            CHECK(evaluate_hj(terms) == Rational(p, q));
        }
}

TEST_CASE("Str(1, 2; 7) has three vertices and end multiplicity 2") {
    const auto s = build_string(1, 2, 7, Sign::minus);
    CHECK(s.interior == std::vector<long long>{1, 1, 1});
    CHECK(s.cf_terms == std::vector<long long>{2, 2, 3});
    CHECK(s.end_mults == std::pair<long long, long long>{1, 2});
    CHECK(s.lambda == 5);
}

TEST_CASE("Str(1, 3; 6) has one vertex") {
    // lambda = 3 by search over 0..5; 6 / 3 = 2
    const auto s = build_string(1, 3, 6, Sign::minus);
    CHECK(s.lambda == 3);
    CHECK(s.interior == std::vector<long long>{1});
    CHECK(s.cf_terms == std::vector<long long>{2});
}

TEST_CASE("Str(1, n; n) is a double arrow") {
    for (long long n = 2; n <= 12; ++n) {
        const auto s = build_string(1, n, n, Sign::minus);
        CHECK(s.is_double_arrow());
        CHECK(s.end_mults == std::pair<long long, long long>{1, 1});
        const auto g = string_as_graph(s);
        CHECK(g.vertices().size() == 2);
        CHECK(g.edges().size() == 1);
    }
}

TEST_CASE("unsupported signatures") {
    try {
        build_string(1, 2, 5, Sign::minus, 1, 0, 1);
        FAIL("expected UnsupportedCase");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::UnsupportedCase);
    }
}

TEST_CASE("string_as_graph carries sign and multiplicities") {
    const auto g = string_as_graph(build_string(1, 2, 7, Sign::minus));
    CHECK(g.vertices().size() == 5);
    CHECK(g.edges().size() == 4);
    for (const auto& e : g.edges()) CHECK(e.sign == Sign::minus);
    CHECK(g.vertex("b").multiplicity == 2);
}

TEST_CASE("property: arrangement strings Str(1, m; n)") {
    for (long long n = 2; n <= 24; ++n)
        for (long long m = 2; m <= n; ++m) {
            const auto s = build_string(1, m, n, Sign::minus);
            CHECK(s.lambda == n - m);
            CHECK(s.end_mults == std::pair<long long, long long>{1, m / std::gcd(m, n)});
            if (s.lambda == 0) {
                CHECK(s.is_double_arrow());
                continue;
            }
            REQUIRE(!s.interior.empty());
            CHECK(s.interior.front() == 1);
            CHECK(evaluate_hj(s.cf_terms) == Rational(n, s.lambda));
            // multiplicity recurrence, term by term
            REQUIRE(s.interior.size() == s.cf_terms.size());
            if (s.interior.size() > 1) CHECK(s.interior[1] == s.cf_terms[0] * s.interior[0] - 1);
            for (std::size_t i = 1; i + 1 < s.interior.size(); ++i) {
                CHECK(s.interior[i + 1] == s.cf_terms[i] * s.interior[i] - s.interior[i - 1]);
            }
            for (long long x : s.interior) CHECK(x >= 1);
        }
}

TEST_CASE("sweeps of the four printed string shapes") {
    for (long long k = 1; k <= 6; ++k) {
        const auto even = build_string(1, 2, 2 * k, Sign::minus);
        CHECK(even.interior == std::vector<long long>(static_cast<std::size_t>(k - 1), 1));
        CHECK(even.end_mults.second == 1);
        const auto odd = build_string(1, 2, 2 * k + 1, Sign::minus);
        CHECK(odd.interior == std::vector<long long>(static_cast<std::size_t>(k), 1));
        CHECK(odd.end_mults.second == 2);
    }
    for (long long n = 2; n <= 12; ++n) {
        CHECK(build_string(1, n, n, Sign::minus).is_double_arrow());
        const auto one = build_string(1, n - 1, n, Sign::minus);
        CHECK(one.interior == std::vector<long long>{1});
        CHECK(one.cf_terms == std::vector<long long>{n});
        CHECK(one.end_mults.second == n - 1);
    }
}
