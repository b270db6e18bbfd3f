#pragma once

#include "mfb/arrangement.hpp"
#include "mfb/graph.hpp"
#include "mfb/matrix.hpp"

#include <optional>
#include <string>
#include <vector>

namespace mfb {

struct SmithForm {
    std::size_t rows = 0;
    std::size_t cols = 0;
    // Nonzero invariant factors d1 | d2 | ... | dr, all positive.
    std::vector<Int> factors;

    std::size_t rank() const { return factors.size(); }
    std::size_t corank() const { return cols - factors.size(); }
};

// Unit pivots are eliminated first on a sparse copy (the weighted incidence
// matrices of plumbing graphs are mostly +-1 off the diagonal); the rest is
// diagonalized densely with the smallest nonzero pivot, then a gcd/lcm pass
// restores the divisibility chain.
SmithForm smith_normal_form(const IntMatrix& m);

// Z^free_rank + Z_{d1} + ... + Z_{dk} with d1 | ... | dk, every di >= 2.
struct AbelianGroup {
    long long free_rank = 0;
    std::vector<Int> torsion;

    // Canonical form from arbitrary cyclic orders (entries 0 count as free
    // summands, entries +-1 are dropped).
    static AbelianGroup from_cyclic(long long free_rank, const std::vector<Int>& orders);

    // Torsion as sorted prime powers; tells Z_4 apart from Z_2 + Z_2.
    std::vector<Int> primary_decomposition() const;
    bool is_torsion_free() const { return torsion.empty(); }

    // "Z^6 (+) Z_4", "Z (+) Z_2 (+) Z_2", "0".
    std::string to_string() const;

    friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;
};

// Symmetric matrix indexed by vertex_order: euler numbers on the diagonal,
// edge signs off it. Needs a closed simple graph.
IntMatrix incidence_matrix(const PlumbingGraph& g);

// corank(A) + 2 * total genus + b1(graph) free summands; torsion of coker A.
AbelianGroup homology_of_graph(const PlumbingGraph& g);

// Sum over multiple points of 1 + (m - 2) * gcd(m, n).
long long betti_formula(const IncidenceData& inc);

// Euler characteristic of the complement of the lines in CP^2:
// 3 - 2n + sum (m_j - 1).
long long projective_complement_euler(const IncidenceData& inc);

// Facts about one arrangement against the torsion conjecture.
struct ConjectureReport {
    long long n = 0;
    AbelianGroup h1;
    long long betti_formula = 0;
    long long chi = 0;
    // (1): hypothesis (m-2)(gcd(m,n)-1) = 0 at every point, and whether the
    // torsion is then Z_n^chi (unset when the hypothesis fails).
    bool hypothesis_holds = false;
    std::optional<bool> torsion_is_zn_chi;
    // (2): every invariant factor divides n.
    bool orders_divide_n = false;
    // (3): torsion-free versus pencil / near-pencil shape.
    bool torsion_free = false;
    bool pencil_or_near_pencil = false;
    bool part3_consistent = false;
};

ConjectureReport probe_conjecture(const IncidenceData& inc);

}  // namespace mfb
