#include "conelab/linalg.hpp"

#include "conelab/errors.hpp"

namespace conelab {

SpanSolver::SpanSolver(const std::vector<SparseVector>& generators) {
  const std::size_t count = generators.size();
  for (std::size_t a = 0; a < count; ++a) {
    SparseVector row = generators[a];
    std::vector<Rational> combo(count);
    combo[a] = 1;
    for (std::size_t i = 0; i < reduced_.size(); ++i) {
      Rational coefficient = sparse_get(row, pivots_[i]);
      if (coefficient == 0) continue;
      row = sparse_axpy(row, -coefficient, reduced_[i]);
      for (std::size_t c = 0; c < count; ++c) combo[c] -= coefficient * transform_[i][c];
    }
    if (row.empty()) {
      throw StructuralError("generator " + std::to_string(a) + " is linearly dependent on earlier ones");
    }
    const std::size_t pivot = row.front().index;
    const Rational inverse = 1 / row.front().value;
    for (auto& e : row) e.value *= inverse;
    for (auto& c : combo) c *= inverse;
    // Clear the new pivot column from earlier rows to keep full reduction.
    for (std::size_t i = 0; i < reduced_.size(); ++i) {
      Rational coefficient = sparse_get(reduced_[i], pivot);
      if (coefficient == 0) continue;
      reduced_[i] = sparse_axpy(reduced_[i], -coefficient, row);
      for (std::size_t c = 0; c < count; ++c) transform_[i][c] -= coefficient * combo[c];
    }
    reduced_.push_back(std::move(row));
    pivots_.push_back(pivot);
    transform_.push_back(std::move(combo));
  }
}

std::optional<std::vector<Rational>> SpanSolver::coordinates(const SparseVector& v) const {
  SparseVector residual = v;
  std::vector<Rational> along(reduced_.size());
  for (std::size_t i = 0; i < reduced_.size(); ++i) {
    along[i] = sparse_get(v, pivots_[i]);
    if (along[i] != 0) residual = sparse_axpy(residual, -along[i], reduced_[i]);
  }
  if (!residual.empty()) return std::nullopt;
  const std::size_t count = reduced_.size();
  std::vector<Rational> coords(count);
  for (std::size_t i = 0; i < count; ++i) {
    if (along[i] == 0) continue;
    for (std::size_t a = 0; a < count; ++a) coords[a] += along[i] * transform_[i][a];
  }
  return coords;
}

std::optional<std::vector<Rational>> solve_square(const Matrix& a, std::span<const Rational> b) {
  const std::size_t n = a.rows();
  if (!a.is_square() || b.size() != n) throw StructuralError("solve_square needs a square system");
  auto m = a.dense();
  std::vector<Rational> rhs(b.begin(), b.end());
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(m[pivot], m[col]);
    std::swap(rhs[pivot], rhs[col]);
    const Rational inverse = 1 / m[col][col];
    for (std::size_t j = col; j < n; ++j) m[col][j] *= inverse;
    rhs[col] *= inverse;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || m[i][col] == 0) continue;
      const Rational factor = m[i][col];
      for (std::size_t j = col; j < n; ++j) m[i][j] -= factor * m[col][j];
      rhs[i] -= factor * rhs[col];
    }
  }
  return rhs;
}

}  // namespace conelab
