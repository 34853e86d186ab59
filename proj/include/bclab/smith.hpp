#pragma once

#include <vector>

#include "bclab/arith.hpp"

namespace bclab {

using IntMatrix = std::vector<std::vector<i64>>;

/// Diagonal form P * A * Q = D over the integers, with P and Q unimodular.
/// The diagonal is not normalized to the divisibility chain; callers only
/// need a direct-sum decomposition.
struct Diagonalization {
    std::vector<i64> diagonal;  ///< min(rows, cols) entries, non-negative
    IntMatrix left;             ///< P, rows x rows
    IntMatrix right;            ///< Q, cols x cols
    IntMatrix right_inverse;    ///< Q^-1
};

Diagonalization diagonalize(IntMatrix a, std::size_t cols);

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);

} // namespace bclab
