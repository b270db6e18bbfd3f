#pragma once

#include "mfb/numeric.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace mfb {

// A projective point or line of CP^2 stored as a primitive integer triple
// whose first nonzero entry is positive. Equal objects have equal triples.
struct ProjTriple {
    std::array<Int, 3> coords;

    friend bool operator==(const ProjTriple&, const ProjTriple&) = default;
    friend auto operator<=>(const ProjTriple& a, const ProjTriple& b) {
        return a.coords <=> b.coords;
    }
};

// The line a*x + b*y + c*z = 0.
struct ProjLine {
    ProjTriple form;
    std::size_t label = 0;

    static ProjLine from_rationals(const std::array<Rational, 3>& coeffs, std::size_t label);
    static ProjLine from_integers(long long a, long long b, long long c, std::size_t label);
};

struct ProjPoint {
    ProjTriple coords;

    static ProjPoint from_rationals(const std::array<Rational, 3>& coords);
    friend bool operator==(const ProjPoint&, const ProjPoint&) = default;
};

// A multiple point of the arrangement: the sorted set of lines through it.
struct MultiPoint {
    std::vector<std::size_t> lines;

    std::size_t multiplicity() const { return lines.size(); }
    friend bool operator==(const MultiPoint&, const MultiPoint&) = default;
};

// Intersection combinatorics of n lines. Every unordered pair of lines lies
// in exactly one MultiPoint.
struct IncidenceData {
    std::size_t n = 0;
    std::vector<MultiPoint> points;

    friend bool operator==(const IncidenceData&, const IncidenceData&) = default;

    // Sorts each line list (point order is kept), then checks the pair-covering
    // axiom. Throws Error(InvalidIncidence) naming the offending pair or point.
    static IncidenceData validated(std::size_t n, std::vector<MultiPoint> points);
};

enum class Family { generic, pencil, near_pencil };

ProjTriple canonical_triple(const std::array<Rational, 3>& values);

ProjPoint intersect_lines(const ProjLine& l1, const ProjLine& l2);

IncidenceData incidence_from_lines(const std::vector<ProjLine>& lines);

// Near-pencil uses line 0 as the transversal and lines 1..n-1 as the pencil.
IncidenceData generate_family(Family kind, std::size_t n);

bool is_generic(const IncidenceData& inc);

bool is_pencil(const IncidenceData& inc);
bool is_near_pencil(const IncidenceData& inc);

// Lines a*x + b*y + c*z with integer coefficients drawn from
// [-coeff_bound, coeff_bound], pairwise non-proportional.
std::vector<ProjLine> random_lines(std::size_t n, int coeff_bound, std::uint64_t seed);

// The lines x + t*y + t^2*z.
std::vector<ProjLine> moment_curve_lines(const std::vector<Rational>& params);

std::string family_name(Family kind);
Family parse_family(const std::string& name);

}  // namespace mfb
