#include "bclab/smith.hpp"

#include <cstdlib>
#include <stdexcept>

namespace bclab {

namespace {

IntMatrix identity(std::size_t n) {
    IntMatrix m(n, std::vector<i64>(n, 0));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

void add_row(IntMatrix& m, std::size_t dst, std::size_t src, i64 k) {
    for (std::size_t j = 0; j < m[dst].size(); ++j) m[dst][j] += k * m[src][j];
}

void add_col(IntMatrix& m, std::size_t dst, std::size_t src, i64 k) {
    for (auto& row : m) row[dst] += k * row[src];
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
    for (auto& row : m) std::swap(row[a], row[b]);
}

} // namespace

Diagonalization diagonalize(IntMatrix a, std::size_t cols) {
    const std::size_t rows = a.size();
    for (const auto& r : a)
        if (r.size() != cols) throw std::invalid_argument("diagonalize: ragged matrix");

    Diagonalization out;
    out.left = identity(rows);
    out.right = identity(cols);
    out.right_inverse = identity(cols);

    // Column ops on A are mirrored on Q (right multiply) and inversely on Q^-1 (left multiply).
    auto col_add = [&](std::size_t dst, std::size_t src, i64 k) {
        add_col(a, dst, src, k);
        add_col(out.right, dst, src, k);
        add_row(out.right_inverse, src, dst, -k);
    };
    auto col_swap = [&](std::size_t x, std::size_t y) {
        swap_cols(a, x, y);
        swap_cols(out.right, x, y);
        std::swap(out.right_inverse[x], out.right_inverse[y]);
    };
    auto col_neg = [&](std::size_t c) {
        for (auto& row : a) row[c] = -row[c];
        for (auto& row : out.right) row[c] = -row[c];
        for (auto& v : out.right_inverse[c]) v = -v;
    };
    auto row_add = [&](std::size_t dst, std::size_t src, i64 k) {
        add_row(a, dst, src, k);
        add_row(out.left, dst, src, k);
    };
    auto row_swap = [&](std::size_t x, std::size_t y) {
        std::swap(a[x], a[y]);
        std::swap(out.left[x], out.left[y]);
    };

    const std::size_t n = std::min(rows, cols);
    for (std::size_t t = 0; t < n; ++t) {
        for (;;) {
            // pivot: smallest nonzero magnitude in the trailing block
            std::size_t pr = rows, pc = cols;
            for (std::size_t i = t; i < rows; ++i)
                for (std::size_t j = t; j < cols; ++j)
                    if (a[i][j] != 0 && (pr == rows || std::llabs(a[i][j]) < std::llabs(a[pr][pc]))) {
                        pr = i;
                        pc = j;
                    }
            if (pr == rows) break;
            row_swap(t, pr);
            col_swap(t, pc);

            bool clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                const i64 q = a[i][t] / a[t][t];
                if (q) row_add(i, t, -q);
                if (a[i][t]) clean = false;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                const i64 q = a[t][j] / a[t][t];
                if (q) col_add(j, t, -q);
                if (a[t][j]) clean = false;
            }
            if (clean) break;
        }
        if (a[t][t] < 0) col_neg(t);
    }

    out.diagonal.resize(n);
    for (std::size_t t = 0; t < n; ++t) out.diagonal[t] = a[t][t];
    return out;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
    const std::size_t inner = b.size();
    const std::size_t cols = inner ? b[0].size() : 0;
    IntMatrix out(a.size(), std::vector<i64>(cols, 0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < inner; ++k)
            if (a[i][k])
                for (std::size_t j = 0; j < cols; ++j) out[i][j] += a[i][k] * b[k][j];
    return out;
}

} // namespace bclab
