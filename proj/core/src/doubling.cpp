#include "conelab/doubling.hpp"

#include "conelab/errors.hpp"
#include "conelab/verify.hpp"

namespace conelab {
namespace {

/// (left right) side by side.
Matrix hstack(const Matrix& left, const Matrix& right) {
  Matrix m(left.rows(), left.cols() + right.cols());
  m.set_block(0, 0, left);
  m.set_block(0, left.cols(), right);
  return m;
}

}  // namespace

Realization half_line() { return Realization(BlockPartition({1}), {}); }

Realization double_unchecked(const Realization& v) {
  const std::size_t r = v.rank();
  const std::size_t n1 = v.partition().size(0);

  std::vector<std::size_t> sizes{2 * n1};
  sizes.insert(sizes.end(), v.partition().sizes().begin(), v.partition().sizes().end());

  std::vector<std::vector<Matrix>> bases(pair_count(r + 1));
  const Matrix zero_first(n1, n1);
  bases[pair_index(1, 0)] = {hstack(Matrix::identity(n1), zero_first), hstack(zero_first, Matrix::identity(n1))};
  for (std::size_t k = 1; k < r; ++k) {
    const auto& old = v.basis(k, 0);
    const Matrix zero(v.partition().size(k), n1);
    auto& target = bases[pair_index(k + 1, 0)];
    for (const auto& e : old) target.push_back(hstack(e, zero));
    for (const auto& e : old) target.push_back(hstack(zero, e));
    for (std::size_t j = 0; j < k; ++j) bases[pair_index(k + 1, j + 1)] = v.basis(k, j);
  }
  return Realization(BlockPartition(std::move(sizes)), std::move(bases));
}

Realization double_realization(const Realization& v) {
  const auto report = verify_v_conditions(v);
  if (!report.passed()) {
    const auto& failed = !report.v1.passed ? report.v1 : !report.v2.passed ? report.v2 : report.v3;
    throw PreconditionError("input realization fails verification: " + failed.first->describe());
  }
  return double_unchecked(v);
}

Realization iterate_construction(std::size_t rank, std::size_t cap) {
  if (rank == 0) throw InvalidArgument("rank must be at least 1");
  if (rank > cap) {
    throw InvalidArgument("rank " + std::to_string(rank) + " exceeds the cap " + std::to_string(cap));
  }
  Realization v = half_line();
  for (std::size_t step = 1; step < rank; ++step) v = double_unchecked(v);
  return v;
}

}  // namespace conelab
