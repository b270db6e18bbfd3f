#include "mfb/arrangement.hpp"

#include "mfb/error.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

namespace mfb {

ProjTriple canonical_triple(const std::array<Rational, 3>& values) {
    Int lcm_den = 1;
    for (const auto& v : values) {
        const Int d = denominator(v);
        lcm_den = lcm_den / gcd(lcm_den, d) * d;
    }
    std::array<Int, 3> ints;
    for (std::size_t i = 0; i < 3; ++i) {
        ints[i] = numerator(values[i]) * (lcm_den / denominator(values[i]));
    }
    Int g = 0;
    for (const auto& v : ints) g = gcd(g, v);
    if (g == 0) throw Error(ErrorCode::InvalidInput, "zero triple is not a projective object");
    const auto lead = std::find_if(ints.begin(), ints.end(), [](const Int& v) { return v != 0; });
    if (*lead < 0) g = -g;
    for (auto& v : ints) v /= g;
    return ProjTriple{ints};
}

ProjLine ProjLine::from_rationals(const std::array<Rational, 3>& coeffs, std::size_t label) {
    return ProjLine{canonical_triple(coeffs), label};
}

ProjLine ProjLine::from_integers(long long a, long long b, long long c, std::size_t label) {
    return from_rationals({Rational(a), Rational(b), Rational(c)}, label);
}

ProjPoint ProjPoint::from_rationals(const std::array<Rational, 3>& coords) {
    return ProjPoint{canonical_triple(coords)};
}

ProjPoint intersect_lines(const ProjLine& l1, const ProjLine& l2) {
    const auto& u = l1.form.coords;
    const auto& v = l2.form.coords;
    const std::array<Rational, 3> cross{
        Rational(u[1] * v[2] - u[2] * v[1]),
        Rational(u[2] * v[0] - u[0] * v[2]),
        Rational(u[0] * v[1] - u[1] * v[0]),
    };
    if (cross[0] == 0 && cross[1] == 0 && cross[2] == 0) {
        throw Error(ErrorCode::IdenticalLines,
                    "lines " + std::to_string(l1.label) + " and " + std::to_string(l2.label) +
                        " are proportional");
    }
    return ProjPoint::from_rationals(cross);
}

IncidenceData IncidenceData::validated(std::size_t n, std::vector<MultiPoint> points) {
    if (n == 0) throw Error(ErrorCode::InvalidIncidence, "arrangement has no lines");
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> owner;
    for (std::size_t p = 0; p < points.size(); ++p) {
        auto& lines = points[p].lines;
        std::sort(lines.begin(), lines.end());
        if (lines.size() < 2) {
            throw Error(ErrorCode::InvalidIncidence,
                        "point " + std::to_string(p) + " has fewer than two lines");
        }
        if (std::adjacent_find(lines.begin(), lines.end()) != lines.end()) {
            throw Error(ErrorCode::InvalidIncidence,
                        "point " + std::to_string(p) + " repeats a line index");
        }
        if (lines.back() >= n) {
            throw Error(ErrorCode::InvalidIncidence,
                        "point " + std::to_string(p) + " references line " +
                            std::to_string(lines.back()) + " but n = " + std::to_string(n));
        }
        for (std::size_t a = 0; a < lines.size(); ++a) {
            for (std::size_t b = a + 1; b < lines.size(); ++b) {
                const auto key = std::make_pair(lines[a], lines[b]);
                auto [it, fresh] = owner.emplace(key, p);
                if (!fresh) {
                    throw Error(ErrorCode::InvalidIncidence,
                                "pair {" + std::to_string(key.first) + ", " +
                                    std::to_string(key.second) + "} lies in points " +
                                    std::to_string(it->second) + " and " + std::to_string(p));
                }
            }
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (!owner.contains({i, j})) {
                throw Error(ErrorCode::InvalidIncidence,
                            "pair {" + std::to_string(i) + ", " + std::to_string(j) +
                                "} is not covered by any point");
            }
        }
    }
    return IncidenceData{n, std::move(points)};
}

IncidenceData incidence_from_lines(const std::vector<ProjLine>& lines) {
    if (lines.empty()) throw Error(ErrorCode::InvalidIncidence, "arrangement has no lines");
    std::map<ProjTriple, std::set<std::size_t>> groups;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        for (std::size_t j = i + 1; j < lines.size(); ++j) {
            const ProjPoint p = intersect_lines(lines[i], lines[j]);
            auto& members = groups[p.coords];
            members.insert(i);
            members.insert(j);
        }
    }
    std::vector<MultiPoint> points;
    points.reserve(groups.size());
    for (const auto& [coords, members] : groups) {
        points.push_back(MultiPoint{{members.begin(), members.end()}});
    }
    std::sort(points.begin(), points.end(),
              [](const MultiPoint& a, const MultiPoint& b) { return a.lines < b.lines; });
    return IncidenceData::validated(lines.size(), std::move(points));
}

IncidenceData generate_family(Family kind, std::size_t n) {
    std::vector<MultiPoint> points;
    switch (kind) {
        case Family::generic:
            if (n < 2) throw Error(ErrorCode::InvalidSize, "generic family needs n >= 2");
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t j = i + 1; j < n; ++j) points.push_back({{i, j}});
            }
            break;
        case Family::pencil: {
            if (n < 2) throw Error(ErrorCode::InvalidSize, "pencil family needs n >= 2");
            MultiPoint center;
            for (std::size_t i = 0; i < n; ++i) center.lines.push_back(i);
            points.push_back(std::move(center));
            break;
        }
        case Family::near_pencil: {
            if (n < 3) throw Error(ErrorCode::InvalidSize, "near-pencil family needs n >= 3");
            MultiPoint center;
            for (std::size_t i = 1; i < n; ++i) center.lines.push_back(i);
            points.push_back(std::move(center));
            for (std::size_t j = 1; j < n; ++j) points.push_back({{0, j}});
            break;
        }
    }
    return IncidenceData::validated(n, std::move(points));
}

bool is_generic(const IncidenceData& inc) {
    return std::all_of(inc.points.begin(), inc.points.end(),
                       [](const MultiPoint& p) { return p.multiplicity() == 2; });
}

bool is_pencil(const IncidenceData& inc) {
    return inc.n >= 2 && inc.points.size() == 1 && inc.points[0].multiplicity() == inc.n;
}

bool is_near_pencil(const IncidenceData& inc) {
    if (inc.n < 3) return false;
    std::size_t big = 0;
    std::size_t doubles = 0;
    for (const auto& p : inc.points) {
        if (p.multiplicity() == inc.n - 1) ++big;
        else if (p.multiplicity() == 2) ++doubles;
        else return false;
    }
    // n = 3 has three double points, any of which can play the pencil point
    if (inc.n == 3) return inc.points.size() == 3;
    return big == 1 && doubles == inc.n - 1;
}

std::vector<ProjLine> random_lines(std::size_t n, int coeff_bound, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coeff(-coeff_bound, coeff_bound);
    std::vector<ProjLine> lines;
    std::set<ProjTriple> seen;
    while (lines.size() < n) {
        const long long a = coeff(rng), b = coeff(rng), c = coeff(rng);
        if (a == 0 && b == 0 && c == 0) continue;
        ProjLine line = ProjLine::from_integers(a, b, c, lines.size());
        if (seen.insert(line.form).second) lines.push_back(std::move(line));
    }
    return lines;
}

std::vector<ProjLine> moment_curve_lines(const std::vector<Rational>& params) {
    std::vector<ProjLine> lines;
    for (std::size_t i = 0; i < params.size(); ++i) {
        const Rational& t = params[i];
        lines.push_back(ProjLine::from_rationals({Rational(1), t, t * t}, i));
    }
    return lines;
}

std::string family_name(Family kind) {
    switch (kind) {
        case Family::generic: return "generic";
        case Family::pencil: return "pencil";
        case Family::near_pencil: return "near_pencil";
    }
    return "unknown";
}

Family parse_family(const std::string& name) {
    if (name == "generic") return Family::generic;
    if (name == "pencil") return Family::pencil;
    if (name == "near_pencil" || name == "near-pencil") return Family::near_pencil;
    throw Error(ErrorCode::InvalidInput, "unknown family '" + name + "'");
}

}  // namespace mfb
