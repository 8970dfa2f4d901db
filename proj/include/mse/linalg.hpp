#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "mse/errors.hpp"
#include "mse/scalar.hpp"

namespace mse {

using Matrix = std::vector<std::vector<Scalar>>;

namespace detail {

/// In-place reduced row echelon form with deterministic pivoting (first
/// usable row per column, columns left to right).  Returns the pivot
/// column of each pivot row, in order.
inline std::vector<std::size_t> rref(Matrix& m) {
    std::vector<std::size_t> pivot_cols;
    if (m.empty()) return pivot_cols;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t next_row = 0;
    for (std::size_t col = 0; col < cols && next_row < rows; ++col) {
        std::size_t sel = next_row;
        while (sel < rows && m[sel][col] == 0) ++sel;
        if (sel == rows) continue;
        std::swap(m[next_row], m[sel]);
        const Scalar piv = m[next_row][col];
        for (std::size_t j = col; j < cols; ++j) m[next_row][j] /= piv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == next_row || m[r][col] == 0) continue;
            const Scalar f = m[r][col];
            for (std::size_t j = col; j < cols; ++j) {
                if (m[next_row][j] != 0) m[r][j] -= f * m[next_row][j];
            }
        }
        pivot_cols.push_back(col);
        ++next_row;
    }
    return pivot_cols;
}

} // namespace detail

/// Solve the square system A x = b exactly; nullopt when A is singular.
inline std::optional<std::vector<Scalar>> solve_square(Matrix a, const std::vector<Scalar>& b) {
    const std::size_t n = a.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i].size() != n) throw Error("solve_square: not square");
        a[i].push_back(b[i]);
    }
    const auto pivots = detail::rref(a);
    if (pivots.size() != n) return std::nullopt;
    std::vector<Scalar> x(n);
    for (std::size_t i = 0; i < n; ++i) x[pivots[i]] = a[i][n];
    return x;
}

/// One nonzero kernel vector of a matrix with a nontrivial kernel,
/// computed deterministically: the first free column gets coefficient 1,
/// the remaining free columns 0, and the result is sign-normalized so its
/// first nonzero entry is positive.  Throws when the kernel is trivial.
inline std::vector<Scalar> kernel_vector(Matrix m) {
    if (m.empty()) throw Error("kernel_vector: empty matrix");
    const std::size_t cols = m[0].size();
    const auto pivot_cols = detail::rref(m);
    if (pivot_cols.size() >= cols) throw Error("kernel_vector: trivial kernel");

    // first non-pivot column
    std::size_t free_col = cols;
    {
        std::size_t pi = 0;
        for (std::size_t c = 0; c < cols; ++c) {
            if (pi < pivot_cols.size() && pivot_cols[pi] == c) { ++pi; continue; }
            free_col = c;
            break;
        }
    }

    std::vector<Scalar> v(cols, Scalar(0));
    v[free_col] = 1;
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) {
        v[pivot_cols[i]] = -m[i][free_col];
    }
    for (const Scalar& x : v) {
        if (x == 0) continue;
        if (x < 0) for (Scalar& y : v) y = -y;
        break;
    }
    return v;
}

} // namespace mse
