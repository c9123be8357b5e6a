#pragma once

#include <span>
#include <vector>

#include "conelab/realization.hpp"

namespace conelab {

/// c with (X tY + Y tX) / 2 = c I. Throws ConditionViolation when the
/// symmetrized product is not scalar, i.e. (V3) fails for this pair.
Rational symmetrized_scalar(const Matrix& x, const Matrix& y);

/// <X, Y>_kj for X, Y given by coordinates in basis(k, j).
Rational inner_product_space(const Realization& v, std::size_t k, std::size_t j,
                             std::span<const Rational> x, std::span<const Rational> y);

/// Gram matrix of basis(k, j) under <.,.>_kj.
std::vector<std::vector<Rational>> gram_matrix(const Realization& v, std::size_t k, std::size_t j);

/// <x, y>_V = sum_i x_ii y_ii + 2 sum_{j<k} <X_kj, Y_kj>_kj
Rational inner_product(const Realization& v, const ConeElement& x, const ConeElement& y);

}  // namespace conelab
