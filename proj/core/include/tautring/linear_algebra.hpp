#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "tautring/rational.hpp"

namespace tautring::linalg {

using Vector = std::vector<Rational>;

/// Reduced row echelon form; `pivots[i]` is the pivot column of rows[i].
struct Echelon {
  std::vector<Vector> rows;
  std::vector<std::size_t> pivots;

  [[nodiscard]] std::size_t rank() const { return rows.size(); }
};

/// Gauss-Jordan elimination over Q. Pivots are chosen left to right; zero
/// rows are dropped.
Echelon row_reduce(std::vector<Vector> rows, std::size_t columns);

/// Eliminates the pivot columns of `e` from v; what remains lives on the
/// non-pivot columns.
Vector reduce(const Echelon& e, Vector v);

/// One solution x of sum_j x_j * columns[j] = target (free variables set to
/// zero), or nullopt if target is outside the column span.
std::optional<Vector> solve(const std::vector<Vector>& columns, const Vector& target);

}  // namespace tautring::linalg
