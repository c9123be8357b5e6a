#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "conelab/matrix.hpp"
#include "conelab/polynomial.hpp"

namespace conelab::rank3 {

/// Matrices A_1, ..., A_r (each n x s) with L(x) = sum_i x_i A_i and
/// R(y) = [A_1 y, ..., A_r y], so that L(x) y = R(y) x = z.
class CompositionFamily {
 public:
  /// Checks counts and shapes, s, n >= 1 and n >= max(r, s). Throws
  /// StructuralError. The composition identity itself is checked by
  /// verify_composition.
  CompositionFamily(std::int64_t r, std::int64_t s, std::int64_t n, std::vector<Matrix> matrices);

  std::int64_t r() const { return r_; }
  std::int64_t s() const { return s_; }
  std::int64_t n() const { return n_; }
  const std::vector<Matrix>& matrices() const { return matrices_; }

  /// L(x), n x s.
  Matrix left(std::span<const Rational> x) const;
  /// R(y), n x r.
  Matrix right(std::span<const Rational> y) const;

  /// L(x) with x_i the polynomial variable x_offset + i.
  PolyMatrix symbolic_left(std::size_t variables, std::size_t x_offset) const;
  /// R(y) with y_j the polynomial variable y_offset + j.
  PolyMatrix symbolic_right(std::size_t variables, std::size_t y_offset) const;

  friend bool operator==(const CompositionFamily&, const CompositionFamily&) = default;

 private:
  std::int64_t r_;
  std::int64_t s_;
  std::int64_t n_;
  std::vector<Matrix> matrices_;
};

/// rho(n) = 8a + 2^b for n = 2^(4a+b) (2l+1), 0 <= b <= 3.
std::int64_t hurwitz_radon_number(std::int64_t n);

/// Square family (r, n, n) with A_1 = I and A_2, ..., A_r skew-symmetric,
/// pairwise anticommuting signed permutation matrices. Throws
/// InvalidArgument when r > rho(n).
CompositionFamily composition_family(std::int64_t r, std::int64_t n);

/// The (3, 5, 7) family whose L(x) has rows
///   (x1, 0, -x3, x2, 0), (0, x1, -x2, -x3, 0), (x3, x2, x1, 0, 0),
///   (-x2, x3, 0, x1, 0), (0, 0, 0, 0, x1), (0, 0, 0, 0, x2), (0, 0, 0, 0, x3).
CompositionFamily family_3_5_7();

struct CompositionReport {
  bool passed = true;
  /// 1-based (i, j) of the first failing relation.
  std::optional<std::pair<std::size_t, std::size_t>> failing_pair;
  std::string detail;
};

/// tA_i A_j + tA_j A_i = 2 delta_ij I_s for all i <= j, exactly.
CompositionReport verify_composition(const CompositionFamily& family);

/// Symbolic check that L(x) y = R(y) x coefficient-wise and that
/// tR(y) R(y) = |y|^2 I_r as a polynomial identity.
CompositionReport consistency_lr(const CompositionFamily& family);

}  // namespace conelab::rank3
