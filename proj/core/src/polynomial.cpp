#include "conelab/polynomial.hpp"

#include <algorithm>

#include "conelab/errors.hpp"

namespace conelab {

Polynomial Polynomial::constant(std::size_t variables, const Rational& c) {
  Polynomial p(variables);
  p.add_term(Exponents(variables, 0), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t variables, std::size_t index) {
  if (index >= variables) throw InvalidArgument("variable index out of range");
  Exponents e(variables, 0);
  e[index] = 1;
  Polynomial p(variables);
  p.add_term(e, 1);
  return p;
}

void Polynomial::add_term(const Exponents& e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void Polynomial::check_compatible(const Polynomial& other) const {
  if (variables_ != other.variables_) throw InvalidArgument("polynomials over different variable sets");
}

std::uint32_t Polynomial::total_degree() const {
  std::uint32_t degree = 0;
  for (const auto& [e, c] : terms_) {
    std::uint32_t d = 0;
    for (auto x : e) d += x;
    degree = std::max(degree, d);
  }
  return degree;
}

bool Polynomial::is_homogeneous() const {
  const auto degree = total_degree();
  return std::all_of(terms_.begin(), terms_.end(), [&](const auto& term) {
    std::uint32_t d = 0;
    for (auto x : term.first) d += x;
    return d == degree;
  });
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
  if (point.size() != variables_) throw InvalidArgument("evaluation point has wrong dimension");
  Rational sum = 0;
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (std::size_t i = 0; i < e.size() && term != 0; ++i) {
      if (e[i] != 0) term *= power(point[i], e[i]);
    }
    sum += term;
  }
  return sum;
}

std::string Polynomial::to_string(const std::vector<std::string>& names) const {
  if (names.size() != variables_) throw InvalidArgument("wrong number of variable names");
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    std::string monomial;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!monomial.empty()) monomial += "*";
      monomial += names[i];
      if (e[i] > 1) monomial += "^" + std::to_string(e[i]);
    }
    const bool negative = c < 0;
    const Rational magnitude = negative ? Rational(-c) : c;
    std::string coefficient = conelab::to_string(magnitude);
    if (out.empty()) {
      out += negative ? "-" : "";
    } else {
      out += negative ? " - " : " + ";
    }
    if (monomial.empty()) {
      out += coefficient;
    } else if (magnitude == 1) {
      out += monomial;
    } else {
      out += coefficient + "*" + monomial;
    }
  }
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  check_compatible(other);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  check_compatible(other);
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& [e, value] : terms_) value *= c;
  }
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_compatible(b);
  Polynomial out(a.variables_);
  Polynomial::Exponents e(a.variables_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

Polynomial dot(const PolyVector& a, const PolyVector& b, std::size_t variables) {
  if (a.size() != b.size()) throw InvalidArgument("length mismatch in polynomial dot product");
  Polynomial sum(variables);
  for (std::size_t i = 0; i < a.size(); ++i) sum += a[i] * b[i];
  return sum;
}

Polynomial squared_norm(const PolyVector& v, std::size_t variables) { return dot(v, v, variables); }

}  // namespace conelab
