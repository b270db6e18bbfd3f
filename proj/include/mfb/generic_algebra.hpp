#pragma once

#include "mfb/homology.hpp"
#include "mfb/matrix.hpp"

#include <optional>

namespace mfb {

// Matrices attached to the generic arrangement of n lines, built straight
// from their block recursions (independently of the plumbing pipeline).

// n(n-1)/2 x n; row (i, j), i < j, has +1 in column i and -1 in column j.
IntMatrix build_Xn(long long n);

// [[-E_n, -X_n^T], [-X_n, -n E]].
IntMatrix build_An(long long n);

// n E - X_n X_n^T.
IntMatrix build_Bn(long long n);

IntMatrix build_Jk(long long k);

// The four block identities for X_n and B_n. Items that mention X_{n-1} are
// unset for n = 2.
struct LemmaReport {
    std::optional<bool> xxt_blocks;      // X_n X_n^T block form
    std::optional<bool> xtx;             // X_n^T X_n = nE - J_n
    std::optional<bool> bn_blocks;       // B_n block form
    std::optional<bool> bn_kills_xn;     // B_n X_n = O and the shifted identity

    bool all_hold() const;
};

LemmaReport check_lemma_identities(long long n);

// Z^{n(n-1)/2} + Z_n^{(n-2)(n-3)/2}.
AbelianGroup generic_h1_closed_form(long long n);

// Invariant factors predicted for A_n: 2n-2 ones, then (n-2)(n-3)/2 copies of n.
std::vector<Int> generic_snf_closed_form(long long n);

}  // namespace mfb
