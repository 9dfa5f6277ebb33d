#pragma once

#include <optional>
#include <vector>

#include "borel/rational.hpp"

namespace borel::linalg {

using Matrix = std::vector<std::vector<Rat>>; // row major

/// In-place reduced row echelon form; returns pivot column per pivot row.
inline std::vector<int> rref(Matrix& m) {
    std::vector<int> pivots;
    if (m.empty()) return pivots;
    const int rows = static_cast<int>(m.size());
    const int cols = static_cast<int>(m[0].size());
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = -1;
        for (int i = r; i < rows; ++i)
            if (!m[i][c].is_zero()) { p = i; break; }
        if (p < 0) continue;
        std::swap(m[r], m[p]);
        Rat inv = Rat(1) / m[r][c];
        for (int j = c; j < cols; ++j) m[r][j] *= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || m[i][c].is_zero()) continue;
            Rat f = m[i][c];
            for (int j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

inline int rank(Matrix m) { return static_cast<int>(rref(m).size()); }

/// Canonical nullspace basis of m (cols unknowns): one vector per free
/// column, entry 1 there, pivots solved. Deterministic order.
inline std::vector<std::vector<Rat>> nullspace(Matrix m, int cols) {
    std::vector<int> pivots = rref(m);
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Rat>> basis;
    for (int f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rat> v(cols, Rat(0));
        v[f] = Rat(1);
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = -m[r][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Unique solution x of a*x = b when columns of a are independent;
/// nullopt when the system is inconsistent.
inline std::optional<std::vector<Rat>> solve_unique(const Matrix& a, const std::vector<Rat>& b) {
    const int rows = static_cast<int>(a.size());
    const int cols = rows ? static_cast<int>(a[0].size()) : 0;
    Matrix aug(rows);
    for (int i = 0; i < rows; ++i) {
        aug[i] = a[i];
        aug[i].push_back(b[i]);
    }
    std::vector<int> pivots = rref(aug);
    for (int c : pivots)
        if (c == cols) return std::nullopt; // pivot in the augmented column
    std::vector<Rat> x(cols, Rat(0));
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug[r][cols];
    // columns independent => every unknown is a pivot; verify residual anyway
    for (int i = 0; i < rows; ++i) {
        Rat acc(0);
        for (int j = 0; j < cols; ++j) acc += a[i][j] * x[j];
        if (acc != b[i]) return std::nullopt;
    }
    return x;
}

} // namespace borel::linalg
