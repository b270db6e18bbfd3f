#include "mfb/generic_algebra.hpp"

#include "mfb/error.hpp"

namespace mfb {

namespace {

void require_size(long long n) {
    if (n < 2) throw Error(ErrorCode::InvalidSize, "need n >= 2, got " + std::to_string(n));
}

std::size_t pairs(long long n) { return static_cast<std::size_t>(n * (n - 1) / 2); }

}  // namespace

IntMatrix build_Xn(long long n) {
    require_size(n);
    if (n == 2) return IntMatrix{{1, -1}};
    const IntMatrix prev = build_Xn(n - 1);
    const auto m = static_cast<std::size_t>(n - 1);
    return IntMatrix::from_blocks(IntMatrix::ones(m, 1), -IntMatrix::identity(m),
                                  IntMatrix::zeros(prev.rows(), 1), prev);
}

IntMatrix build_An(long long n) {
    const IntMatrix x = build_Xn(n);
    return IntMatrix::from_blocks(-IntMatrix::identity(static_cast<std::size_t>(n)), -x.transpose(),
                                  -x, Int(-n) * IntMatrix::identity(pairs(n)));
}

IntMatrix build_Bn(long long n) {
    const IntMatrix x = build_Xn(n);
    return Int(n) * IntMatrix::identity(pairs(n)) - x * x.transpose();
}

IntMatrix build_Jk(long long k) {
    if (k < 1) throw Error(ErrorCode::InvalidSize, "J_k needs k >= 1");
    return IntMatrix::ones(static_cast<std::size_t>(k), static_cast<std::size_t>(k));
}

bool LemmaReport::all_hold() const {
    for (const auto& item : {xxt_blocks, xtx, bn_blocks, bn_kills_xn}) {
        if (item && !*item) return false;
    }
    return true;
}

LemmaReport check_lemma_identities(long long n) {
    require_size(n);
    LemmaReport r;
    const IntMatrix x = build_Xn(n);
    const auto sn = static_cast<std::size_t>(n);
    r.xtx = x.transpose() * x == Int(n) * IntMatrix::identity(sn) - build_Jk(n);
    if (n == 2) return r;

    const IntMatrix xp = build_Xn(n - 1);
    const IntMatrix xpt = xp.transpose();
    const std::size_t m = sn - 1;
    const IntMatrix ep = IntMatrix::identity(pairs(n - 1));

    r.xxt_blocks = x * x.transpose() ==
                   IntMatrix::from_blocks(build_Jk(n - 1) + IntMatrix::identity(m), -xpt, -xp,
                                          xp * xpt);
    const IntMatrix bn = build_Bn(n);
    r.bn_blocks = bn == IntMatrix::from_blocks(xpt * xp, xpt, xp, Int(n) * ep - xp * xpt);
    r.bn_kills_xn = bn * x == IntMatrix::zeros(pairs(n), sn) &&
                    (Int(n) * ep - xp * xpt) * xp == xp;
    return r;
}

AbelianGroup generic_h1_closed_form(long long n) {
    require_size(n);
    return AbelianGroup::from_cyclic(
        n * (n - 1) / 2, std::vector<Int>(static_cast<std::size_t>((n - 2) * (n - 3) / 2), Int(n)));
}

std::vector<Int> generic_snf_closed_form(long long n) {
    require_size(n);
    std::vector<Int> d(static_cast<std::size_t>(2 * n - 2), Int(1));
    d.insert(d.end(), static_cast<std::size_t>((n - 2) * (n - 3) / 2), Int(n));
    return d;
}

}  // namespace mfb
