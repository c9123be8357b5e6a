#include "conelab/inner_product.hpp"

#include "conelab/errors.hpp"

namespace conelab {

Rational symmetrized_scalar(const Matrix& x, const Matrix& y) {
  const Matrix product = multiply_transposed(x, y);
  auto c = (product + product.transpose()).scalar_value();
  if (!c) throw ConditionViolation("symmetrized product X tY + Y tX is not a scalar matrix (V3 fails)");
  return *c / 2;
}

Rational inner_product_space(const Realization& v, std::size_t k, std::size_t j,
                             std::span<const Rational> x, std::span<const Rational> y) {
  return symmetrized_scalar(v.combine(k, j, x), v.combine(k, j, y));
}

std::vector<std::vector<Rational>> gram_matrix(const Realization& v, std::size_t k, std::size_t j) {
  const auto& list = v.basis(k, j);
  std::vector<std::vector<Rational>> gram(list.size(), std::vector<Rational>(list.size()));
  for (std::size_t a = 0; a < list.size(); ++a) {
    for (std::size_t b = a; b < list.size(); ++b) {
      gram[a][b] = symmetrized_scalar(list[a], list[b]);
      gram[b][a] = gram[a][b];
    }
  }
  return gram;
}

Rational inner_product(const Realization& v, const ConeElement& x, const ConeElement& y) {
  v.check_shape(x);
  v.check_shape(y);
  Rational sum = dot(x.diag, y.diag);
  for (std::size_t k = 1; k < v.rank(); ++k) {
    for (std::size_t j = 0; j < k; ++j) {
      if (v.dim(k, j) == 0) continue;
      sum += 2 * inner_product_space(v, k, j, x.at(k, j), y.at(k, j));
    }
  }
  return sum;
}

}  // namespace conelab
