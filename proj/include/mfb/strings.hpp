#pragma once

#include "mfb/graph.hpp"
#include "mfb/numeric.hpp"

#include <utility>
#include <vector>

namespace mfb {

struct LambdaSolution {
    long long lambda = 0;
    long long m1 = 0;
    friend bool operator==(const LambdaSolution&, const LambdaSolution&) = default;
};

// Unique 0 <= lambda < c/(a,c) and m1 > 0 with b + lambda*a/(a,c) = m1*c/(a,c).
LambdaSolution solve_lambda(long long a, long long b, long long c);

// Negative continued fraction p/q = k1 - 1/(k2 - 1/(... - 1/ks)), all ki >= 2.
std::vector<long long> hj_continued_fraction(long long p, long long q);

// Exact value of k1 - 1/(k2 - ... - 1/ks).
Rational evaluate_hj(const std::vector<long long>& terms);

// Str^{sign}(a, b; c | 0, 0; 1).
struct StringGraph {
    long long a = 0, b = 0, c = 0;
    Sign sign = Sign::minus;
    long long lambda = 0;
    std::vector<long long> interior;     // multiplicities m1..ms
    std::vector<long long> cf_terms;     // k1..ks
    std::pair<long long, long long> end_mults;

    bool is_double_arrow() const { return interior.empty(); }
};

// Only the (i, j; k) = (0, 0; 1) signature is supported; anything else is
// rejected with UnsupportedCase.
StringGraph build_string(long long a, long long b, long long c, Sign sign,
                         long long i = 0, long long j = 0, long long k = 1);

// The chain as a plumbing graph: arrowhead "a" -- interior -- arrowhead "b",
// multiplicities attached, every edge carrying the string's sign.
PlumbingGraph string_as_graph(const StringGraph& s);

}  // namespace mfb
