#pragma once

#include <optional>
#include <vector>

#include "conelab/matrix.hpp"

namespace conelab {

/// Exact coordinates with respect to a fixed, linearly independent list of
/// generators. The generators are reduced once to row echelon form; each
/// query is then a single pass over the pivots.
class SpanSolver {
 public:
  SpanSolver() = default;
  /// Throws StructuralError when the generators are linearly dependent.
  explicit SpanSolver(const std::vector<SparseVector>& generators);

  std::size_t dimension() const { return reduced_.size(); }

  /// Coefficients c with v = sum_a c_a g_a, or nullopt when v is outside
  /// the span.
  std::optional<std::vector<Rational>> coordinates(const SparseVector& v) const;
  bool contains(const SparseVector& v) const { return coordinates(v).has_value(); }

 private:
  std::vector<SparseVector> reduced_;
  std::vector<std::size_t> pivots_;
  // reduced_[i] = sum_a transform_[i][a] * generator_a
  std::vector<std::vector<Rational>> transform_;
};

/// Gauss-Jordan solve of a square system; nullopt when singular.
std::optional<std::vector<Rational>> solve_square(const Matrix& a, std::span<const Rational> b);

}  // namespace conelab
