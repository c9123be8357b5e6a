#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "conelab/linalg.hpp"
#include "conelab/matrix.hpp"

namespace conelab {

/// Off-diagonal spaces are addressed by block pairs (k, j) with
/// 0 <= j < k < r, stored in the order (1,0), (2,0), (2,1), (3,0), ...
constexpr std::size_t pair_index(std::size_t k, std::size_t j) { return k * (k - 1) / 2 + j; }
constexpr std::size_t pair_count(std::size_t rank) { return rank * (rank - 1) / 2; }

/// Ordered block sizes (n_1, ..., n_r) of the ambient Sym(N).
class BlockPartition {
 public:
  BlockPartition() = default;
  /// Throws StructuralError for an empty list or a zero block.
  explicit BlockPartition(std::vector<std::size_t> sizes);

  std::size_t rank() const { return sizes_.size(); }
  std::size_t total() const { return offsets_.empty() ? 0 : offsets_.back() + sizes_.back(); }
  std::size_t size(std::size_t block) const { return sizes_.at(block); }
  std::size_t offset(std::size_t block) const { return offsets_.at(block); }
  const std::vector<std::size_t>& sizes() const { return sizes_; }

  friend bool operator==(const BlockPartition&, const BlockPartition&) = default;

 private:
  std::vector<std::size_t> sizes_;
  std::vector<std::size_t> offsets_;
};

/// Coordinates of x in V: scalar diagonal blocks and, for every pair
/// (k, j), the coordinate vector of X_kj in basis(k, j).
struct ConeElement {
  std::vector<Rational> diag;
  std::vector<std::vector<Rational>> off;  // pair-indexed

  std::vector<Rational>& at(std::size_t k, std::size_t j) { return off.at(pair_index(k, j)); }
  const std::vector<Rational>& at(std::size_t k, std::size_t j) const { return off.at(pair_index(k, j)); }
  bool is_zero() const;

  friend bool operator==(const ConeElement&, const ConeElement&) = default;
};

/// Coordinates of h in the triangular group H: nonzero scalar diagonal
/// blocks and strictly lower blocks T_kj in V_kj.
struct GroupElement {
  std::vector<Rational> diag;
  std::vector<std::vector<Rational>> lower;  // pair-indexed

  std::vector<Rational>& at(std::size_t k, std::size_t j) { return lower.at(pair_index(k, j)); }
  const std::vector<Rational>& at(std::size_t k, std::size_t j) const { return lower.at(pair_index(k, j)); }

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

/// The first block of a matrix that does not fit the realization.
struct BlockViolation {
  std::size_t row_block = 0;
  std::size_t col_block = 0;
  std::string reason;
};

template <class T>
struct Projection {
  std::optional<T> element;
  BlockViolation violation;  // meaningful only when !element

  explicit operator bool() const { return element.has_value(); }
};

/// The realization datum V = {V_kj}: a partition plus an exact basis for
/// each off-diagonal space. Construction checks shapes and linear
/// independence only; conditions (V1)-(V3) are checked by
/// verify_v_conditions.
class Realization {
 public:
  Realization() = default;
  /// `bases` is pair-indexed and must have pair_count(rank) entries; each
  /// basis(k, j) element must be n_k x n_j. Throws StructuralError.
  Realization(BlockPartition partition, std::vector<std::vector<Matrix>> bases);

  const BlockPartition& partition() const { return partition_; }
  std::size_t rank() const { return partition_.rank(); }
  std::size_t total_size() const { return partition_.total(); }

  const std::vector<Matrix>& basis(std::size_t k, std::size_t j) const;
  std::size_t dim(std::size_t k, std::size_t j) const { return basis(k, j).size(); }

  /// Coordinates of an n_k x n_j matrix in basis(k, j); nullopt if outside.
  std::optional<std::vector<Rational>> coordinates(std::size_t k, std::size_t j, const Matrix& m) const;
  /// sum_a coords_a * basis(k, j)_a
  Matrix combine(std::size_t k, std::size_t j, std::span<const Rational> coords) const;

  ConeElement zero_element() const;
  ConeElement identity_element() const;
  GroupElement identity_group() const;

  /// Throws StructuralError if the coordinate vectors do not match.
  void check_shape(const ConeElement& x) const;
  void check_shape(const GroupElement& h) const;

  friend bool operator==(const Realization& a, const Realization& b) {
    return a.partition_ == b.partition_ && a.bases_ == b.bases_;
  }

 private:
  void check_pair(std::size_t k, std::size_t j) const;

  BlockPartition partition_;
  std::vector<std::vector<Matrix>> bases_;
  std::vector<SpanSolver> solvers_;
};

/// The N x N symmetric matrix of x.
Matrix embed(const Realization& v, const ConeElement& x);
/// The N x N block lower triangular matrix of h.
Matrix embed(const Realization& v, const GroupElement& h);

/// Inverse of embed on V. Fails on a non-symmetric input, a non-scalar
/// diagonal block or an off-diagonal block outside its span.
Projection<ConeElement> project(const Realization& v, const Matrix& m);
/// Inverse of embed on H. Fails on nonzero upper blocks, non-scalar or
/// zero diagonal blocks, or lower blocks outside their span.
Projection<GroupElement> project_group(const Realization& v, const Matrix& m);

}  // namespace conelab
