#include "tautring/linear_algebra.hpp"

#include <stdexcept>

namespace tautring::linalg {

Echelon row_reduce(std::vector<Vector> rows, std::size_t columns) {
  for (auto& r : rows) {
    if (r.size() != columns) throw std::invalid_argument("row length mismatch");
  }
  Echelon e;
  std::size_t next = 0;
  for (std::size_t col = 0; col < columns && next < rows.size(); ++col) {
    std::size_t pivot = next;
    while (pivot < rows.size() && rows[pivot][col].is_zero()) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[next], rows[pivot]);
    const Rational inv = Rational(1) / rows[next][col];
    for (std::size_t j = col; j < columns; ++j) rows[next][j] *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == next || rows[i][col].is_zero()) continue;
      const Rational factor = rows[i][col];
      for (std::size_t j = col; j < columns; ++j) {
        if (!rows[next][j].is_zero()) rows[i][j] -= factor * rows[next][j];
      }
    }
    e.pivots.push_back(col);
    ++next;
  }
  rows.resize(next);
  e.rows = std::move(rows);
  return e;
}

Vector reduce(const Echelon& e, Vector v) {
  for (std::size_t i = 0; i < e.rows.size(); ++i) {
    const Rational factor = v[e.pivots[i]];
    if (factor.is_zero()) continue;
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (!e.rows[i][j].is_zero()) v[j] -= factor * e.rows[i][j];
    }
  }
  return v;
}

std::optional<Vector> solve(const std::vector<Vector>& columns, const Vector& target) {
  const std::size_t n_rows = target.size();
  const std::size_t n_cols = columns.size();
  // augmented matrix [A | b], one row per coordinate
  std::vector<Vector> rows(n_rows, Vector(n_cols + 1));
  for (std::size_t j = 0; j < n_cols; ++j) {
    if (columns[j].size() != n_rows) throw std::invalid_argument("column length mismatch");
    for (std::size_t i = 0; i < n_rows; ++i) rows[i][j] = columns[j][i];
  }
  for (std::size_t i = 0; i < n_rows; ++i) rows[i][n_cols] = target[i];

  const Echelon e = row_reduce(std::move(rows), n_cols + 1);
  Vector x(n_cols);
  for (std::size_t i = 0; i < e.rows.size(); ++i) {
    if (e.pivots[i] == n_cols) return std::nullopt;  // 0 = nonzero
    x[e.pivots[i]] = e.rows[i][n_cols];
  }
  return x;
}

}  // namespace tautring::linalg
