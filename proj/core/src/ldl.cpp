#include "conelab/ldl.hpp"

#include <algorithm>

#include "conelab/errors.hpp"
#include "conelab/inner_product.hpp"

namespace conelab {

bool LdlResult::in_closure() const {
  return status == LdlStatus::complete &&
         std::all_of(pivots.begin(), pivots.end(), [](const Rational& d) { return d >= 0; });
}

LdlResult ldl_decompose(const Realization& v, const ConeElement& x) {
  v.check_shape(x);
  const std::size_t r = v.rank();
  ConeElement work = x;
  LdlResult out;
  out.unit = v.identity_group();

  for (std::size_t j = 0; j < r; ++j) {
    const Rational pivot = work.diag[j];
    std::vector<Matrix> column(r);
    bool column_zero = true;
    for (std::size_t k = j + 1; k < r; ++k) {
      column[k] = v.combine(k, j, work.at(k, j));
      column_zero = column_zero && column[k].is_zero();
    }
    out.pivots.push_back(pivot);
    if (pivot == 0) {
      if (!column_zero) {
        out.status = LdlStatus::breakdown;
        out.is_member = false;
        return out;
      }
      continue;
    }
    for (std::size_t k = j + 1; k < r; ++k) {
      auto& t = out.unit.at(k, j);
      const auto& coords = work.at(k, j);
      for (std::size_t a = 0; a < coords.size(); ++a) t[a] = coords[a] / pivot;
    }
    // Schur complement: x_kk -= |X_kj|^2 / d, X_kl -= X_kj tX_lj / d.
    for (std::size_t k = j + 1; k < r; ++k) {
      if (column[k].is_zero()) continue;
      work.diag[k] -= symmetrized_scalar(column[k], column[k]) / pivot;
      for (std::size_t l = j + 1; l < k; ++l) {
        if (column[l].is_zero()) continue;
        auto coords = v.coordinates(k, l, multiply_transposed(column[k], column[l]));
        if (!coords) {
          throw ConditionViolation("Schur complement leaves V at block (" + std::to_string(k + 1) + "," +
                                   std::to_string(l + 1) + "); (V2) fails");
        }
        auto& target = work.at(k, l);
        for (std::size_t a = 0; a < target.size(); ++a) target[a] -= (*coords)[a] / pivot;
      }
    }
  }
  out.is_member = std::all_of(out.pivots.begin(), out.pivots.end(), [](const Rational& d) { return d > 0; });
  return out;
}

Rational determinant_from_pivots(const Realization& v, const LdlResult& ldl) {
  if (ldl.status != LdlStatus::complete) throw PreconditionError("decomposition broke down; no determinant");
  Rational det = 1;
  for (std::size_t i = 0; i < ldl.pivots.size(); ++i) {
    det *= power(ldl.pivots[i], static_cast<long>(v.partition().size(i)));
  }
  return det;
}

}  // namespace conelab
