#include "mfb/homology.hpp"

#include "mfb/error.hpp"
#include "mfb/pipeline.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <unordered_map>

namespace mfb {

AbelianGroup AbelianGroup::from_cyclic(long long free_rank, const std::vector<Int>& orders) {
    AbelianGroup g;
    g.free_rank = free_rank;
    std::vector<Int> d;
    for (const auto& o : orders) {
        const Int a = boost::multiprecision::abs(o);
        if (a == 0) ++g.free_rank;
        else if (a != 1) d.push_back(a);
    }
    for (std::size_t i = 0; i < d.size(); ++i) {
        for (std::size_t j = i + 1; j < d.size(); ++j) {
            const Int gg = gcd(d[i], d[j]);
            const Int l = d[i] / gg * d[j];
            d[i] = gg;
            d[j] = l;
        }
    }
    std::erase_if(d, [](const Int& x) { return x == 1; });
    g.torsion = std::move(d);
    return g;
}

std::vector<Int> AbelianGroup::primary_decomposition() const {
    std::vector<Int> out;
    for (Int x : torsion) {
        for (Int p = 2; p * p <= x; ++p) {
            if (x % p != 0) continue;
            Int q = 1;
            while (x % p == 0) {
                x /= p;
                q *= p;
            }
            out.push_back(q);
        }
        if (x > 1) out.push_back(x);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string AbelianGroup::to_string() const {
    std::vector<std::string> parts;
    if (free_rank == 1) parts.emplace_back("Z");
    else if (free_rank > 1) parts.push_back("Z^" + std::to_string(free_rank));
    for (const auto& d : torsion) parts.push_back("Z_" + d.str());
    if (parts.empty()) return "0";
    std::string out = parts.front();
    for (std::size_t i = 1; i < parts.size(); ++i) out += " (+) " + parts[i];
    return out;
}

IntMatrix incidence_matrix(const PlumbingGraph& g) {
    for (const auto& v : g.vertices()) {
        if (!v.euler) throw Error(ErrorCode::MissingEuler, "vertex '" + v.id + "' has no euler number");
    }
    if (!g.is_simple()) {
        throw Error(ErrorCode::NonSimpleGraph,
                    "graph has loops or multiple edges; handle_absorb or zero_chain_absorb "
                    "may simplify it first");
    }
    const auto order = vertex_order(g);
    std::unordered_map<std::string, std::size_t> pos;
    for (std::size_t i = 0; i < order.size(); ++i) pos.emplace(order[i], i);
    IntMatrix a(order.size(), order.size());
    for (std::size_t i = 0; i < order.size(); ++i) a(i, i) = *g.vertex(order[i]).euler;
    for (const auto& e : g.edges()) {
        const std::size_t i = pos.at(e.a), j = pos.at(e.b);
        a(i, j) = to_int(e.sign);
        a(j, i) = to_int(e.sign);
    }
    return a;
}

AbelianGroup homology_of_graph(const PlumbingGraph& g) {
    const SmithForm snf = smith_normal_form(incidence_matrix(g));
    long long genus = 0;
    for (const auto& v : g.vertices()) genus += v.genus;
    const long long free = static_cast<long long>(snf.corank()) + 2 * genus + first_betti_of_graph(g);
    return AbelianGroup::from_cyclic(free, snf.factors);
}

long long betti_formula(const IncidenceData& inc) {
    const auto n = static_cast<long long>(inc.n);
    long long total = 0;
    for (const auto& p : inc.points) {
        const auto m = static_cast<long long>(p.multiplicity());
        total += 1 + (m - 2) * std::gcd(m, n);
    }
    return total;
}

long long projective_complement_euler(const IncidenceData& inc) {
    long long chi = 3 - 2 * static_cast<long long>(inc.n);
    for (const auto& p : inc.points) chi += static_cast<long long>(p.multiplicity()) - 1;
    return chi;
}

ConjectureReport probe_conjecture(const IncidenceData& inc) {
    ConjectureReport r;
    r.n = static_cast<long long>(inc.n);
    r.h1 = homology_of_graph(boundary_graph(inc));
    r.betti_formula = betti_formula(inc);
    r.chi = projective_complement_euler(inc);
    r.hypothesis_holds = std::all_of(inc.points.begin(), inc.points.end(), [&](const MultiPoint& p) {
        const auto m = static_cast<long long>(p.multiplicity());
        return (m - 2) * (std::gcd(m, r.n) - 1) == 0;
    });
    if (r.hypothesis_holds) {
        const std::vector<Int> predicted(static_cast<std::size_t>(std::max(r.chi, 0LL)), Int(r.n));
        r.torsion_is_zn_chi = r.chi >= 0 && r.h1.torsion == AbelianGroup::from_cyclic(0, predicted).torsion;
    }
    r.orders_divide_n = std::all_of(r.h1.torsion.begin(), r.h1.torsion.end(),
                                    [&](const Int& d) { return Int(r.n) % d == 0; });
    r.torsion_free = r.h1.is_torsion_free();
    r.pencil_or_near_pencil = is_pencil(inc) || is_near_pencil(inc);
    r.part3_consistent = r.torsion_free == r.pencil_or_near_pencil;
    return r;
}

}  // namespace mfb
