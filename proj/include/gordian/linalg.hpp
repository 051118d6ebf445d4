#pragma once
// Small dense exact linear algebra: ranks over fields, Smith invariants over Z,
// and a mod-p solver used by the brute-force oracle.

#include "gordian/gring.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace gordian::linalg {

using ScalarMatrix = std::vector<std::vector<Scalar>>;
using IntMatrix = std::vector<std::vector<BigInt>>;

inline std::size_t rank(ScalarMatrix m) {
    if (m.empty()) return 0;
    std::size_t rows = m.size(), cols = m[0].size(), r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && m[piv][c].is_zero()) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[r]);
        Scalar inv = m[r][c].inverse();
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (m[i][c].is_zero()) continue;
            Scalar f = m[i][c] * inv;
            for (std::size_t j = c; j < cols; ++j) m[i][j] = m[i][j] - f * m[r][j];
        }
        ++r;
    }
    return r;
}

// nonzero invariant factors (positive), in divisibility order
inline std::vector<BigInt> smith_invariants(IntMatrix a) {
    std::vector<BigInt> out;
    if (a.empty() || a[0].empty()) return out;
    std::size_t rows = a.size(), cols = a[0].size();
    std::size_t t = 0;
    while (t < rows && t < cols) {
        // smallest nonzero entry in the remaining block
        std::optional<std::pair<std::size_t, std::size_t>> best;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j)
                if (a[i][j] != 0 && (!best || abs(a[i][j]) < abs(a[best->first][best->second]))) best = {i, j};
        if (!best) break;
        std::swap(a[t], a[best->first]);
        for (auto& row : a) std::swap(row[t], row[best->second]);
        bool clean = false;
        while (!clean) {
            clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (a[i][t] == 0) continue;
                BigInt f = a[i][t] / a[t][t];
                for (std::size_t j = t; j < cols; ++j) a[i][j] -= f * a[t][j];
                if (a[i][t] != 0) {
                    std::swap(a[i], a[t]);
                    clean = false;
                }
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (a[t][j] == 0) continue;
                BigInt f = a[t][j] / a[t][t];
                for (std::size_t i = t; i < rows; ++i) a[i][j] -= f * a[i][t];
                if (a[t][j] != 0) {
                    for (auto& row : a) std::swap(row[t], row[j]);
                    clean = false;
                }
            }
            if (clean) {
                // pivot must divide the rest of the block
                for (std::size_t i = t + 1; i < rows && clean; ++i)
                    for (std::size_t j = t + 1; j < cols; ++j)
                        if (a[i][j] % a[t][t] != 0) {
                            for (std::size_t k = t; k < cols; ++k) a[t][k] += a[i][k];
                            clean = false;
                            break;
                        }
            }
        }
        out.push_back(abs(a[t][t]));
        ++t;
    }
    return out;
}

// Dense matrices over F_p with machine words.
struct ModP {
    std::uint64_t p;
    std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return (a + b) % p; }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return (a + p - b) % p; }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
        return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
    }
    std::uint64_t inv(std::uint64_t a) const {
        std::uint64_t r = 1, e = p - 2;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
};

using ModMatrix = std::vector<std::vector<std::uint64_t>>;

// Row-reduce in place; returns pivot columns.
inline std::vector<std::size_t> row_reduce(ModMatrix& m, const ModP& f, std::size_t ncols) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < ncols && r < m.size(); ++c) {
        std::size_t piv = r;
        while (piv < m.size() && m[piv][c] == 0) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[piv], m[r]);
        std::uint64_t inv = f.inv(m[r][c]);
        for (auto& x : m[r]) x = f.mul(x, inv);
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == r || m[i][c] == 0) continue;
            std::uint64_t k = m[i][c];
            for (std::size_t j = 0; j < m[i].size(); ++j) m[i][j] = f.sub(m[i][j], f.mul(k, m[r][j]));
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

// Solve A x = b (A given as columns); returns whether a solution exists.
inline bool solvable(const std::vector<std::vector<std::uint64_t>>& cols, const std::vector<std::uint64_t>& b,
                     const ModP& f) {
    std::size_t n = b.size();
    ModMatrix m(n, std::vector<std::uint64_t>(cols.size() + 1, 0));
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (std::size_t i = 0; i < n; ++i) m[i][j] = cols[j][i];
    for (std::size_t i = 0; i < n; ++i) m[i][cols.size()] = b[i];
    auto piv = row_reduce(m, f, cols.size() + 1);
    return piv.empty() || piv.back() != cols.size();
}

// Basis of the null space of the matrix with the given rows (ncols unknowns).
inline std::vector<std::vector<std::uint64_t>> null_space(ModMatrix m, std::size_t ncols, const ModP& f) {
    auto piv = row_reduce(m, f, ncols);
    std::vector<bool> is_piv(ncols, false);
    for (auto c : piv) is_piv[c] = true;
    std::vector<std::vector<std::uint64_t>> basis;
    for (std::size_t free = 0; free < ncols; ++free) {
        if (is_piv[free]) continue;
        std::vector<std::uint64_t> v(ncols, 0);
        v[free] = 1;
        for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = f.sub(0, m[r][free]);
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace gordian::linalg
