#pragma once

// Small dense reference routines, written independently of the sparse engine.

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstdint>
#include <vector>

namespace oracle {

using Int = boost::multiprecision::cpp_int;
using Dense = std::vector<std::vector<Int>>;

inline Dense zeros(std::size_t r, std::size_t c) { return Dense(r, std::vector<Int>(c, 0)); }

inline Dense multiply(const Dense& a, const Dense& b, std::size_t inner) {
    std::size_t r = a.size();
    std::size_t c = b.empty() ? 0 : b[0].size();
    Dense out = zeros(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t k = 0; k < inner; ++k)
            if (a[i][k] != 0)
                for (std::size_t j = 0; j < c; ++j) out[i][j] += a[i][k] * b[k][j];
    return out;
}

/// Fraction-free Bareiss determinant.
inline Int determinant(Dense m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    Int sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t s = k + 1;
            while (s < n && m[s][k] == 0) ++s;
            if (s == n) return 0;
            std::swap(m[k], m[s]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

/// Rank over Z/p by plain Gaussian elimination (p prime, small).
inline std::size_t rank_mod_p(const Dense& a, std::int64_t p) {
    std::vector<std::vector<std::int64_t>> m;
    for (const auto& row : a) {
        std::vector<std::int64_t> r;
        for (const auto& v : row) {
            Int x = v % p;
            if (x < 0) x += p;
            r.push_back(static_cast<std::int64_t>(x));
        }
        m.push_back(r);
    }
    std::size_t rank = 0;
    std::size_t cols = m.empty() ? 0 : m[0].size();
    for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
        std::size_t piv = rank;
        while (piv < m.size() && m[piv][c] == 0) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[piv], m[rank]);
        std::int64_t inv = 1, base = m[rank][c], e = p - 2;
        while (e > 0) {
            if (e & 1) inv = inv * base % p;
            base = base * base % p;
            e >>= 1;
        }
        for (auto& v : m[rank]) v = v * inv % p;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == rank || m[i][c] == 0) continue;
            std::int64_t f = m[i][c];
            for (std::size_t j = 0; j < cols; ++j) m[i][j] = ((m[i][j] - f * m[rank][j]) % p + p) % p;
        }
        ++rank;
    }
    return rank;
}

inline void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
                    std::vector<std::vector<std::size_t>>& out) {
    if (cur.size() == k) {
        out.push_back(cur);
        return;
    }
    for (std::size_t i = start; i < n; ++i) {
        cur.push_back(i);
        subsets(n, k, i + 1, cur, out);
        cur.pop_back();
    }
}

/// Invariant factors from determinantal divisors (gcd of all k-minors).
/// Exponential; only for tiny matrices.
inline std::vector<Int> invariant_factors_by_minors(const Dense& a) {
    std::size_t r = a.size();
    std::size_t c = r == 0 ? 0 : a[0].size();
    std::vector<Int> dk{1};
    for (std::size_t k = 1; k <= std::min(r, c); ++k) {
        std::vector<std::vector<std::size_t>> rs, cs;
        std::vector<std::size_t> cur;
        subsets(r, k, 0, cur, rs);
        subsets(c, k, 0, cur, cs);
        Int g = 0;
        for (const auto& ri : rs)
            for (const auto& ci : cs) {
                Dense minor = zeros(k, k);
                for (std::size_t i = 0; i < k; ++i)
                    for (std::size_t j = 0; j < k; ++j) minor[i][j] = a[ri[i]][ci[j]];
                Int d = determinant(minor);
                if (d < 0) d = -d;
                g = boost::multiprecision::gcd(g, d);
            }
        if (g == 0) break;
        dk.push_back(g);
    }
    std::vector<Int> out;
    for (std::size_t k = 1; k < dk.size(); ++k) out.push_back(dk[k] / dk[k - 1]);
    return out;
}

/// Textbook dense Smith diagonal (nonzero entries, ascending divisibility).
inline std::vector<Int> smith_diagonal(Dense a) {
    std::size_t r = a.size();
    std::size_t c = r == 0 ? 0 : a[0].size();
    std::vector<Int> diag;
    auto abs_ = [](const Int& v) { return v < 0 ? Int(-v) : v; };
    for (std::size_t t = 0; t < std::min(r, c); ++t) {
        for (;;) {
            std::size_t pi = r, pj = c;
            for (std::size_t i = t; i < r; ++i)
                for (std::size_t j = t; j < c; ++j)
                    if (a[i][j] != 0 && (pi == r || abs_(a[i][j]) < abs_(a[pi][pj]))) {
                        pi = i;
                        pj = j;
                    }
            if (pi == r) return diag;
            std::swap(a[t], a[pi]);
            for (auto& row : a) std::swap(row[t], row[pj]);
            bool dirty = false;
            for (std::size_t i = t + 1; i < r; ++i) {
                Int q = a[i][t] / a[t][t];
                for (std::size_t j = t; j < c; ++j) a[i][j] -= q * a[t][j];
                if (a[i][t] != 0) dirty = true;
            }
            for (std::size_t j = t + 1; j < c; ++j) {
                Int q = a[t][j] / a[t][t];
                for (std::size_t i = t; i < r; ++i) a[i][j] -= q * a[i][t];
                if (a[t][j] != 0) dirty = true;
            }
            if (dirty) continue;
            std::size_t bad = r;
            for (std::size_t i = t + 1; i < r && bad == r; ++i)
                for (std::size_t j = t + 1; j < c; ++j)
                    if (a[i][j] % a[t][t] != 0) {
                        bad = i;
                        break;
                    }
            if (bad == r) break;
            for (std::size_t j = t; j < c; ++j) a[t][j] += a[bad][j];
        }
        diag.push_back(abs_(a[t][t]));
    }
    return diag;
}

}  // namespace oracle
