#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "conelab/realization.hpp"

namespace conelab {

/// Structure constants d_kj = dim V_kj, 0 <= j < k < r (0-based).
class DimTable {
 public:
  explicit DimTable(std::size_t rank = 1);

  /// Measured from a realization.
  static DimTable of(const Realization& v);
  /// d_kj = 2^(k-j), the table of the doubling family.
  static DimTable powers_of_two(std::size_t rank);
  /// Rank-3 table with (d32, d21, d31) = (r, s, n).
  static DimTable rank3(std::int64_t r, std::int64_t s, std::int64_t n);

  std::size_t rank() const { return rank_; }
  std::int64_t at(std::size_t k, std::size_t j) const;
  /// Throws InvalidArgument for a negative value or bad indices.
  void set(std::size_t k, std::size_t j, std::int64_t value);

  friend bool operator==(const DimTable&, const DimTable&) = default;

 private:
  std::size_t rank_;
  std::vector<std::int64_t> dims_;  // pair-indexed
};

using IntMatrix = std::vector<std::vector<std::int64_t>>;

/// Intermediate vectors of the sigma algorithm, kept for audit.
struct SigmaTrace {
  /// l[i] holds l_i^(i), l_i^(i+1), ..., l_i^(r-2) (0-based i), each of length r.
  std::vector<std::vector<std::vector<std::int64_t>>> l;
  /// epsilon[i][m] = eps_{i+1+m, i}
  std::vector<std::vector<int>> epsilon;
};

/// Unit lower triangular sigma; row j is the multidegree of Delta_j on
/// diagonal elements.
struct SigmaMatrix {
  IntMatrix entries;
  SigmaTrace trace;

  std::size_t rank() const { return entries.size(); }
};

/// sigma = E_{r-1} ... E_1 from the structure constants. Throws
/// InconsistentDims if an intermediate l-vector acquires a negative entry.
SigmaMatrix sigma_from_dims(const DimTable& dims);

/// sigma * (1, ..., 1)^t
std::vector<std::int64_t> degrees_from_sigma(const SigmaMatrix& sigma);

/// Degrees of the dual of a rank-3 cone with (d32, d21, d31) = (r, s, n),
/// in the dual's own numbering (Delta*_1 first).
std::vector<std::int64_t> dual_degrees_rank3(std::int64_t r, std::int64_t s, std::int64_t n);

/// (2 sigma_j1, ..., 2 sigma_jr): chi_j(h) = prod_i t_ii^(2 sigma_ji).
std::vector<std::int64_t> character_exponents(const SigmaMatrix& sigma, std::size_t j);

/// chi_j evaluated on the diagonal of h.
Rational character_value(const SigmaMatrix& sigma, std::size_t j, const GroupElement& h);

}  // namespace conelab
