#include "conelab/degrees.hpp"

#include <algorithm>
#include <string>

#include "conelab/errors.hpp"

namespace conelab {

DimTable::DimTable(std::size_t rank) : rank_(rank), dims_(pair_count(rank), 0) {
  if (rank == 0) throw InvalidArgument("rank must be at least 1");
}

DimTable DimTable::of(const Realization& v) {
  DimTable table(v.rank());
  for (std::size_t k = 1; k < v.rank(); ++k) {
    for (std::size_t j = 0; j < k; ++j) table.set(k, j, static_cast<std::int64_t>(v.dim(k, j)));
  }
  return table;
}

DimTable DimTable::powers_of_two(std::size_t rank) {
  if (rank > 62) throw InvalidArgument("rank too large for 64-bit dimensions");
  DimTable table(rank);
  for (std::size_t k = 1; k < rank; ++k) {
    for (std::size_t j = 0; j < k; ++j) table.set(k, j, std::int64_t{1} << (k - j));
  }
  return table;
}

DimTable DimTable::rank3(std::int64_t r, std::int64_t s, std::int64_t n) {
  DimTable table(3);
  table.set(2, 1, r);
  table.set(1, 0, s);
  table.set(2, 0, n);
  return table;
}

std::int64_t DimTable::at(std::size_t k, std::size_t j) const {
  if (!(j < k && k < rank_)) throw InvalidArgument("dimension index out of range");
  return dims_[pair_index(k, j)];
}

void DimTable::set(std::size_t k, std::size_t j, std::int64_t value) {
  if (!(j < k && k < rank_)) throw InvalidArgument("dimension index out of range");
  if (value < 0) {
    throw InvalidArgument("d" + std::to_string(k + 1) + std::to_string(j + 1) + " is negative");
  }
  dims_[pair_index(k, j)] = value;
}

SigmaMatrix sigma_from_dims(const DimTable& dims) {
  const std::size_t r = dims.rank();
  auto column = [&](std::size_t i) {
    std::vector<std::int64_t> d(r, 0);
    for (std::size_t k = i + 1; k < r; ++k) d[k] = dims.at(k, i);
    return d;
  };

  SigmaMatrix sigma;
  sigma.entries.assign(r, std::vector<std::int64_t>(r, 0));
  for (std::size_t i = 0; i < r; ++i) sigma.entries[i][i] = 1;
  if (r == 1) return sigma;

  for (std::size_t i = 0; i + 1 < r; ++i) {
    std::vector<std::vector<std::int64_t>> steps;
    std::vector<std::int64_t> l = column(i);
    steps.push_back(l);
    for (std::size_t k = i + 1; k + 1 < r; ++k) {
      if (l[k] > 0) {
        const auto dk = column(k);
        for (std::size_t m = 0; m < r; ++m) l[m] -= dk[m];
        for (std::size_t m = 0; m < r; ++m) {
          if (l[m] < 0) {
            throw InconsistentDims("dimension table not consistent with a homogeneous cone: l_" +
                                   std::to_string(i + 1) + "^(" + std::to_string(k + 1) + ") has entry " +
                                   std::to_string(l[m]) + " at position " + std::to_string(m + 1));
          }
        }
      }
      steps.push_back(l);
    }
    std::vector<int> eps;
    for (std::size_t j = i + 1; j < r; ++j) eps.push_back(l[j] > 0 ? 1 : 0);
    sigma.trace.l.push_back(std::move(steps));
    sigma.trace.epsilon.push_back(eps);
  }

  // sigma = E_{r-1} ... E_1; left multiplication by E_i adds eps_ji * row_i to row_j.
  for (std::size_t i = 0; i + 1 < r; ++i) {
    const auto& eps = sigma.trace.epsilon[i];
    for (std::size_t j = i + 1; j < r; ++j) {
      if (eps[j - i - 1] == 0) continue;
      for (std::size_t c = 0; c < r; ++c) sigma.entries[j][c] += sigma.entries[i][c];
    }
  }
  return sigma;
}

std::vector<std::int64_t> degrees_from_sigma(const SigmaMatrix& sigma) {
  std::vector<std::int64_t> degrees;
  degrees.reserve(sigma.rank());
  for (const auto& row : sigma.entries) {
    std::int64_t sum = 0;
    for (auto v : row) sum += v;
    degrees.push_back(sum);
  }
  return degrees;
}

std::vector<std::int64_t> dual_degrees_rank3(std::int64_t r, std::int64_t s, std::int64_t n) {
  // The dual realization, re-read as a lower one, has (d32, d21, d31) = (s, r, n)
  // and its invariants numbered from the opposite end.
  auto degrees = degrees_from_sigma(sigma_from_dims(DimTable::rank3(s, r, n)));
  std::reverse(degrees.begin(), degrees.end());
  return degrees;
}

std::vector<std::int64_t> character_exponents(const SigmaMatrix& sigma, std::size_t j) {
  if (j >= sigma.rank()) throw InvalidArgument("character index out of range");
  std::vector<std::int64_t> exponents;
  for (auto v : sigma.entries[j]) exponents.push_back(2 * v);
  return exponents;
}

Rational character_value(const SigmaMatrix& sigma, std::size_t j, const GroupElement& h) {
  const auto exponents = character_exponents(sigma, j);
  if (h.diag.size() != exponents.size()) throw StructuralError("group element rank does not match sigma");
  Rational value = 1;
  for (std::size_t i = 0; i < exponents.size(); ++i) value *= power(h.diag[i], exponents[i]);
  return value;
}

}  // namespace conelab
