#include "mfb/homology.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace mfb {

namespace {

using boost::multiprecision::abs;

// Eliminates +-1 pivots in Markowitz order, returning how many were removed
// and leaving the untouched remainder in `rest`.
std::size_t eliminate_unit_pivots(const IntMatrix& m, IntMatrix& rest) {
    const std::size_t R = m.rows(), C = m.cols();
    std::vector<std::map<std::size_t, Int>> rows(R);
    std::vector<std::set<std::size_t>> cols(C);
    for (std::size_t r = 0; r < R; ++r) {
        for (std::size_t c = 0; c < C; ++c) {
            if (m(r, c) != 0) {
                rows[r].emplace(c, m(r, c));
                cols[c].insert(r);
            }
        }
    }
    std::vector<bool> row_alive(R, true), col_alive(C, true);
    std::size_t units = 0;

    while (true) {
        std::size_t best_r = R, best_c = C, best_cost = static_cast<std::size_t>(-1);
        for (std::size_t r = 0; r < R && best_cost != 0; ++r) {
            if (!row_alive[r]) continue;
            for (const auto& [c, v] : rows[r]) {
                if (v != 1 && v != -1) continue;
                const std::size_t cost = (rows[r].size() - 1) * (cols[c].size() - 1);
                if (cost < best_cost) {
                    best_cost = cost;
                    best_r = r;
                    best_c = c;
                    if (cost == 0) break;
                }
            }
        }
        if (best_r == R) break;

        const Int pivot = rows[best_r].at(best_c);
        const std::vector<std::size_t> targets(cols[best_c].begin(), cols[best_c].end());
        for (std::size_t r : targets) {
            if (r == best_r) continue;
            const Int factor = rows[r].at(best_c) * pivot;
            for (const auto& [c, v] : rows[best_r]) {
                auto [it, fresh] = rows[r].try_emplace(c, 0);
                it->second -= factor * v;
                if (it->second == 0) {
                    rows[r].erase(it);
                    cols[c].erase(r);
                } else if (fresh) {
                    cols[c].insert(r);
                }
            }
        }
        for (const auto& [c, v] : rows[best_r]) cols[c].erase(best_r);
        rows[best_r].clear();
        row_alive[best_r] = false;
        col_alive[best_c] = false;
        ++units;
    }

    std::vector<std::size_t> live_rows, live_cols;
    for (std::size_t r = 0; r < R; ++r) if (row_alive[r]) live_rows.push_back(r);
    for (std::size_t c = 0; c < C; ++c) if (col_alive[c]) live_cols.push_back(c);
    std::vector<std::size_t> col_pos(C, 0);
    for (std::size_t j = 0; j < live_cols.size(); ++j) col_pos[live_cols[j]] = j;
    rest = IntMatrix(live_rows.size(), live_cols.size());
    for (std::size_t i = 0; i < live_rows.size(); ++i) {
        for (const auto& [c, v] : rows[live_rows[i]]) rest(i, col_pos[c]) = v;
    }
    return units;
}

std::vector<Int> dense_diagonal(IntMatrix a) {
    const std::size_t R = a.rows(), C = a.cols();
    std::vector<Int> diag;
    auto swap_rows = [&](std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t c = 0; c < C; ++c) std::swap(a(i, c), a(j, c));
    };
    auto swap_cols = [&](std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t r = 0; r < R; ++r) std::swap(a(r, i), a(r, j));
    };

    for (std::size_t t = 0; t < std::min(R, C); ++t) {
        std::size_t pr = R, pc = C;
        for (std::size_t r = t; r < R; ++r) {
            for (std::size_t c = t; c < C; ++c) {
                if (a(r, c) != 0 && (pr == R || abs(a(r, c)) < abs(a(pr, pc)))) {
                    pr = r;
                    pc = c;
                }
            }
        }
        if (pr == R) break;
        swap_rows(t, pr);
        swap_cols(t, pc);

        while (true) {
            bool clean = true;
            for (std::size_t r = t + 1; r < R; ++r) {
                if (a(r, t) == 0) continue;
                const Int q = a(r, t) / a(t, t);
                if (q != 0) {
                    for (std::size_t c = t; c < C; ++c) a(r, c) -= q * a(t, c);
                }
                if (a(r, t) != 0) clean = false;
            }
            for (std::size_t c = t + 1; c < C; ++c) {
                if (a(t, c) == 0) continue;
                const Int q = a(t, c) / a(t, t);
                if (q != 0) {
                    for (std::size_t r = t; r < R; ++r) a(r, c) -= q * a(r, t);
                }
                if (a(t, c) != 0) clean = false;
            }
            if (clean) break;
            // a remainder is now smaller than the pivot; promote it
            std::size_t br = t, bc = t;
            for (std::size_t r = t + 1; r < R; ++r) {
                if (a(r, t) != 0 && abs(a(r, t)) < abs(a(br, bc))) { br = r; bc = t; }
            }
            for (std::size_t c = t + 1; c < C; ++c) {
                if (a(t, c) != 0 && abs(a(t, c)) < abs(a(br, bc))) { br = t; bc = c; }
            }
            swap_rows(t, br);
            swap_cols(t, bc);
        }
        diag.push_back(abs(a(t, t)));
    }
    return diag;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m) {
    IntMatrix rest;
    const std::size_t units = eliminate_unit_pivots(m, rest);
    std::vector<Int> d(units, Int(1));
    const auto tail = dense_diagonal(std::move(rest));
    d.insert(d.end(), tail.begin(), tail.end());

    for (std::size_t i = 0; i < d.size(); ++i) {
        for (std::size_t j = i + 1; j < d.size(); ++j) {
            if (d[j] % d[i] == 0) continue;
            const Int g = gcd(d[i], d[j]);
            const Int l = d[i] / g * d[j];
            d[i] = g;
            d[j] = l;
        }
    }
    return SmithForm{m.rows(), m.cols(), std::move(d)};
}

}  // namespace mfb
