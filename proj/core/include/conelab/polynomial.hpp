#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "conelab/rational.hpp"

namespace conelab {

/// Sparse multivariate polynomial with exact rational coefficients over a
/// fixed number of variables.
class Polynomial {
 public:
  using Exponents = std::vector<std::uint32_t>;

  explicit Polynomial(std::size_t variables = 0) : variables_(variables) {}

  static Polynomial constant(std::size_t variables, const Rational& c);
  static Polynomial variable(std::size_t variables, std::size_t index);

  std::size_t variables() const { return variables_; }
  const std::map<Exponents, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Maximum total degree over the monomials; 0 for the zero polynomial.
  std::uint32_t total_degree() const;
  bool is_homogeneous() const;

  Rational evaluate(std::span<const Rational> point) const;
  std::string to_string(const std::vector<std::string>& names) const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) { return a *= Rational(-1); }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void add_term(const Exponents& e, const Rational& c);
  void check_compatible(const Polynomial& other) const;

  std::size_t variables_;
  std::map<Exponents, Rational> terms_;
};

using PolyVector = std::vector<Polynomial>;
using PolyMatrix = std::vector<PolyVector>;

/// sum_i a_i b_i over `variables` variables (the vectors may be empty).
Polynomial dot(const PolyVector& a, const PolyVector& b, std::size_t variables);
Polynomial squared_norm(const PolyVector& v, std::size_t variables);

}  // namespace conelab
