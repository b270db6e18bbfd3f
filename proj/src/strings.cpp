#include "mfb/strings.hpp"

#include "mfb/error.hpp"

#include <numeric>
#include <string>

namespace mfb {

namespace {

// x with a*x = 1 mod m, for gcd(a, m) = 1 and m >= 1.
long long inverse_mod(long long a, long long m) {
    long long old_r = a % m, r = m;
    long long old_s = 1, s = 0;
    while (r != 0) {
        const long long q = old_r / r;
        old_r -= q * r;
        std::swap(old_r, r);
        old_s -= q * s;
        std::swap(old_s, s);
    }
    if (old_r != 1 && m != 1) {
        throw Error(ErrorCode::NoSolution, "no inverse of " + std::to_string(a) + " mod " +
                                               std::to_string(m));
    }
    return ((old_s % m) + m) % m;
}

void require_positive(long long a, long long b, long long c) {
    if (a <= 0 || b <= 0 || c <= 0) {
        throw Error(ErrorCode::InvalidInput, "string parameters must be positive");
    }
    if (std::gcd(std::gcd(a, b), c) != 1) {
        throw Error(ErrorCode::InvalidInput, "string parameters need gcd(a, b, c) = 1");
    }
}

}  // namespace

LambdaSolution solve_lambda(long long a, long long b, long long c) {
    require_positive(a, b, c);
    const long long g = std::gcd(a, c);
    const long long ar = a / g;
    const long long cr = c / g;
    const long long inv = inverse_mod(ar % cr, cr);
    const long long neg_b = ((-b) % cr + cr) % cr;
    const long long lambda = static_cast<long long>((static_cast<__int128>(neg_b) * inv) % cr);
    const long long numer = b + lambda * ar;
    if (numer % cr != 0 || numer / cr <= 0) {
        throw Error(ErrorCode::NoSolution, "lambda equation has no positive solution");
    }
    return {lambda, numer / cr};
}

std::vector<long long> hj_continued_fraction(long long p, long long q) {
    if (q <= 0 || q >= p) {
        throw Error(ErrorCode::InvalidInput, "continued fraction needs 0 < q < p, got " +
                                                 std::to_string(p) + "/" + std::to_string(q));
    }
    std::vector<long long> terms;
    while (q != 0) {
        const long long k = (p + q - 1) / q;
        terms.push_back(k);
        const long long r = k * q - p;
        p = q;
        q = r;
    }
    return terms;
}

Rational evaluate_hj(const std::vector<long long>& terms) {
    if (terms.empty()) throw Error(ErrorCode::InvalidInput, "empty continued fraction");
    Rational value(terms.back());
    for (auto it = terms.rbegin() + 1; it != terms.rend(); ++it) {
        value = Rational(*it) - 1 / value;
    }
    return value;
}

StringGraph build_string(long long a, long long b, long long c, Sign sign, long long i,
                         long long j, long long k) {
    if (i != 0 || j != 0 || k != 1) {
        throw Error(ErrorCode::UnsupportedCase,
                    "only string graphs with (i, j; k) = (0, 0; 1) are supported");
    }
    const LambdaSolution sol = solve_lambda(a, b, c);
    StringGraph s;
    s.a = a;
    s.b = b;
    s.c = c;
    s.sign = sign;
    s.lambda = sol.lambda;
    s.end_mults = {a / std::gcd(a, c), b / std::gcd(b, c)};
    if (sol.lambda == 0) return s;

    const long long cr = c / std::gcd(a, c);
    s.cf_terms = hj_continued_fraction(cr, sol.lambda);
    s.interior.push_back(sol.m1);
    for (std::size_t t = 0; t + 1 < s.cf_terms.size(); ++t) {
        const long long prev = t == 0 ? s.end_mults.first : s.interior[t - 1];
        s.interior.push_back(s.cf_terms[t] * s.interior[t] - prev);
    }
    for (long long m : s.interior) {
        if (m <= 0) {
            throw Error(ErrorCode::NoSolution, "string multiplicities are not positive");
        }
    }
    return s;
}

PlumbingGraph string_as_graph(const StringGraph& s) {
    PlumbingGraph g;
    g.add_vertex(Vertex{"a", 0, std::nullopt, s.end_mults.first, VertexKind::arrowhead, {}});
    std::string prev = "a";
    for (std::size_t t = 0; t < s.interior.size(); ++t) {
        const std::string id = "m" + std::to_string(t + 1);
        g.add_vertex(Vertex{id, 0, std::nullopt, s.interior[t], VertexKind::string, {}});
        g.add_edge(Edge{prev, id, s.sign, std::nullopt, false});
        prev = id;
    }
    g.add_vertex(Vertex{"b", 0, std::nullopt, s.end_mults.second, VertexKind::arrowhead, {}});
    g.add_edge(Edge{prev, "b", s.sign, std::nullopt, false});
    return g;
}

}  // namespace mfb
