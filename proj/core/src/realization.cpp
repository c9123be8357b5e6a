#include "conelab/realization.hpp"

#include <algorithm>

#include "conelab/errors.hpp"

namespace conelab {
namespace {

std::string block_name(std::size_t k, std::size_t j) {
  return "(" + std::to_string(k + 1) + "," + std::to_string(j + 1) + ")";
}

bool all_zero(const std::vector<Rational>& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& q) { return q == 0; });
}

}  // namespace

BlockPartition::BlockPartition(std::vector<std::size_t> sizes) : sizes_(std::move(sizes)) {
  if (sizes_.empty()) throw StructuralError("partition must have at least one block");
  std::size_t offset = 0;
  for (std::size_t i = 0; i < sizes_.size(); ++i) {
    if (sizes_[i] == 0) throw StructuralError("block " + std::to_string(i + 1) + " has size 0");
    offsets_.push_back(offset);
    offset += sizes_[i];
  }
}

bool ConeElement::is_zero() const {
  return all_zero(diag) && std::all_of(off.begin(), off.end(), all_zero);
}

Realization::Realization(BlockPartition partition, std::vector<std::vector<Matrix>> bases)
    : partition_(std::move(partition)), bases_(std::move(bases)) {
  const std::size_t r = partition_.rank();
  if (bases_.size() != pair_count(r)) {
    throw StructuralError("expected " + std::to_string(pair_count(r)) + " off-diagonal spaces, got " +
                          std::to_string(bases_.size()));
  }
  solvers_.reserve(bases_.size());
  for (std::size_t k = 1; k < r; ++k) {
    for (std::size_t j = 0; j < k; ++j) {
      const auto& list = bases_[pair_index(k, j)];
      std::vector<SparseVector> flat;
      flat.reserve(list.size());
      for (std::size_t a = 0; a < list.size(); ++a) {
        if (list[a].rows() != partition_.size(k) || list[a].cols() != partition_.size(j)) {
          throw StructuralError("basis element " + std::to_string(a) + " of V" + block_name(k, j) +
                                " must be " + std::to_string(partition_.size(k)) + "x" +
                                std::to_string(partition_.size(j)));
        }
        flat.push_back(list[a].flatten());
      }
      try {
        solvers_.emplace_back(flat);
      } catch (const StructuralError& e) {
        throw StructuralError("basis of V" + block_name(k, j) + ": " + e.what());
      }
    }
  }
}

void Realization::check_pair(std::size_t k, std::size_t j) const {
  if (!(j < k && k < rank())) {
    throw StructuralError("no off-diagonal space " + block_name(k, j) + " in rank " + std::to_string(rank()));
  }
}

const std::vector<Matrix>& Realization::basis(std::size_t k, std::size_t j) const {
  check_pair(k, j);
  return bases_[pair_index(k, j)];
}

std::optional<std::vector<Rational>> Realization::coordinates(std::size_t k, std::size_t j,
                                                              const Matrix& m) const {
  check_pair(k, j);
  if (m.rows() != partition_.size(k) || m.cols() != partition_.size(j)) {
    throw StructuralError("matrix shape does not match V" + block_name(k, j));
  }
  return solvers_[pair_index(k, j)].coordinates(m.flatten());
}

Matrix Realization::combine(std::size_t k, std::size_t j, std::span<const Rational> coords) const {
  const auto& list = basis(k, j);
  if (coords.size() != list.size()) {
    throw StructuralError("V" + block_name(k, j) + " has dimension " + std::to_string(list.size()) +
                          ", got " + std::to_string(coords.size()) + " coordinates");
  }
  Matrix m(partition_.size(k), partition_.size(j));
  for (std::size_t a = 0; a < list.size(); ++a) {
    if (coords[a] != 0) m += coords[a] * list[a];
  }
  return m;
}

ConeElement Realization::zero_element() const {
  ConeElement x;
  x.diag.assign(rank(), Rational(0));
  x.off.resize(bases_.size());
  for (std::size_t p = 0; p < bases_.size(); ++p) x.off[p].assign(bases_[p].size(), Rational(0));
  return x;
}

ConeElement Realization::identity_element() const {
  ConeElement x = zero_element();
  std::fill(x.diag.begin(), x.diag.end(), Rational(1));
  return x;
}

GroupElement Realization::identity_group() const {
  ConeElement x = identity_element();
  return GroupElement{std::move(x.diag), std::move(x.off)};
}

void Realization::check_shape(const ConeElement& x) const {
  if (x.diag.size() != rank() || x.off.size() != bases_.size()) {
    throw StructuralError("cone element does not match the realization rank");
  }
  for (std::size_t p = 0; p < bases_.size(); ++p) {
    if (x.off[p].size() != bases_[p].size()) {
      throw StructuralError("cone element coordinate vector " + std::to_string(p) + " has wrong length");
    }
  }
}

void Realization::check_shape(const GroupElement& h) const {
  if (h.diag.size() != rank() || h.lower.size() != bases_.size()) {
    throw StructuralError("group element does not match the realization rank");
  }
  for (std::size_t p = 0; p < bases_.size(); ++p) {
    if (h.lower[p].size() != bases_[p].size()) {
      throw StructuralError("group element coordinate vector " + std::to_string(p) + " has wrong length");
    }
  }
  for (std::size_t i = 0; i < h.diag.size(); ++i) {
    if (h.diag[i] == 0) throw StructuralError("group element has zero diagonal t_" + std::to_string(i + 1));
  }
}

Matrix embed(const Realization& v, const ConeElement& x) {
  v.check_shape(x);
  const auto& part = v.partition();
  Matrix m(part.total(), part.total());
  for (std::size_t i = 0; i < v.rank(); ++i) {
    m.set_block(part.offset(i), part.offset(i), Matrix::scalar(part.size(i), x.diag[i]));
  }
  for (std::size_t k = 1; k < v.rank(); ++k) {
    for (std::size_t j = 0; j < k; ++j) {
      const Matrix block = v.combine(k, j, x.at(k, j));
      m.set_block(part.offset(k), part.offset(j), block);
      m.set_block(part.offset(j), part.offset(k), block.transpose());
    }
  }
  return m;
}

Matrix embed(const Realization& v, const GroupElement& h) {
  v.check_shape(h);
  const auto& part = v.partition();
  Matrix m(part.total(), part.total());
  for (std::size_t i = 0; i < v.rank(); ++i) {
    m.set_block(part.offset(i), part.offset(i), Matrix::scalar(part.size(i), h.diag[i]));
  }
  for (std::size_t k = 1; k < v.rank(); ++k) {
    for (std::size_t j = 0; j < k; ++j) {
      m.set_block(part.offset(k), part.offset(j), v.combine(k, j, h.at(k, j)));
    }
  }
  return m;
}

Projection<ConeElement> project(const Realization& v, const Matrix& m) {
  const auto& part = v.partition();
  if (m.rows() != part.total() || m.cols() != part.total()) {
    throw StructuralError("matrix size does not match the partition total");
  }
  Projection<ConeElement> out;
  ConeElement x = v.zero_element();
  for (std::size_t k = 0; k < v.rank(); ++k) {
    const Matrix diag_block = m.block(part.offset(k), part.offset(k), part.size(k), part.size(k));
    auto c = diag_block.scalar_value();
    if (!c) {
      out.violation = {k, k, "diagonal block is not a scalar multiple of the identity"};
      return out;
    }
    x.diag[k] = *c;
    for (std::size_t j = 0; j < k; ++j) {
      const Matrix lower = m.block(part.offset(k), part.offset(j), part.size(k), part.size(j));
      const Matrix upper = m.block(part.offset(j), part.offset(k), part.size(j), part.size(k));
      if (upper != lower.transpose()) {
        out.violation = {k, j, "matrix is not symmetric"};
        return out;
      }
      auto coords = v.coordinates(k, j, lower);
      if (!coords) {
        out.violation = {k, j, "off-diagonal block is outside its space"};
        return out;
      }
      x.at(k, j) = std::move(*coords);
    }
  }
  out.element = std::move(x);
  return out;
}

Projection<GroupElement> project_group(const Realization& v, const Matrix& m) {
  const auto& part = v.partition();
  if (m.rows() != part.total() || m.cols() != part.total()) {
    throw StructuralError("matrix size does not match the partition total");
  }
  Projection<GroupElement> out;
  GroupElement h = v.identity_group();
  for (std::size_t k = 0; k < v.rank(); ++k) {
    const Matrix diag_block = m.block(part.offset(k), part.offset(k), part.size(k), part.size(k));
    auto c = diag_block.scalar_value();
    if (!c || *c == 0) {
      out.violation = {k, k, "diagonal block is not a nonzero scalar multiple of the identity"};
      return out;
    }
    h.diag[k] = *c;
    for (std::size_t j = 0; j < k; ++j) {
      if (!m.block(part.offset(j), part.offset(k), part.size(j), part.size(k)).is_zero()) {
        out.violation = {j, k, "upper block is nonzero"};
        return out;
      }
      auto coords = v.coordinates(k, j, m.block(part.offset(k), part.offset(j), part.size(k), part.size(j)));
      if (!coords) {
        out.violation = {k, j, "lower block is outside its space"};
        return out;
      }
      h.at(k, j) = std::move(*coords);
    }
  }
  out.element = std::move(h);
  return out;
}

}  // namespace conelab
