#include "conelab/composition.hpp"

#include <algorithm>

#include "conelab/errors.hpp"

namespace conelab::rank3 {
namespace {

using Units = std::vector<int>;

Units conjugate(const Units& a) {
  if (a.size() == 1) return a;
  const std::size_t h = a.size() / 2;
  Units lo = conjugate(Units(a.begin(), a.begin() + h));
  Units out = lo;
  for (std::size_t i = h; i < a.size(); ++i) out.push_back(-a[i]);
  return out;
}

Units add(const Units& a, const Units& b, int sign) {
  Units out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + sign * b[i];
  return out;
}

/// Cayley-Dickson product (a, b)(c, d) = (ac - d* b, da + b c*).
Units multiply(const Units& x, const Units& y) {
  if (x.size() == 1) return {x[0] * y[0]};
  const std::size_t h = x.size() / 2;
  const Units a(x.begin(), x.begin() + h), b(x.begin() + h, x.end());
  const Units c(y.begin(), y.begin() + h), d(y.begin() + h, y.end());
  Units first = add(multiply(a, c), multiply(conjugate(d), b), -1);
  const Units second = add(multiply(d, a), multiply(b, conjugate(c)), 1);
  first.insert(first.end(), second.begin(), second.end());
  return first;
}

/// Left multiplications by the imaginary units of the Cayley-Dickson
/// algebra of dimension m in {1, 2, 4, 8}: m - 1 skew, anticommuting
/// signed permutation matrices squaring to -I.
std::vector<Matrix> imaginary_units(std::size_t m) {
  std::vector<Matrix> out;
  for (std::size_t i = 1; i < m; ++i) {
    Units ei(m, 0);
    ei[i] = 1;
    Matrix left(m, m);
    for (std::size_t j = 0; j < m; ++j) {
      Units ej(m, 0);
      ej[j] = 1;
      const Units product = multiply(ei, ej);
      for (std::size_t row = 0; row < m; ++row) {
        if (product[row] != 0) left.set(row, j, product[row]);
      }
    }
    out.push_back(std::move(left));
  }
  return out;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (const auto& ea : a.row(i)) {
      for (std::size_t k = 0; k < b.rows(); ++k) {
        for (const auto& eb : b.row(k)) {
          out.set(i * b.rows() + k, ea.index * b.cols() + eb.index, ea.value * eb.value);
        }
      }
    }
  }
  return out;
}

/// Eight anticommuting skew generators on R^16 and their product, which is
/// symmetric, squares to I and anticommutes with each of them.
std::pair<std::vector<Matrix>, Matrix> period_generators() {
  const Matrix z = Matrix::from_rows({{1, 0}, {0, -1}});
  const Matrix j = Matrix::from_rows({{0, -1}, {1, 0}});
  std::vector<Matrix> gens;
  for (const auto& e : imaginary_units(8)) gens.push_back(kron(z, e));
  gens.push_back(kron(j, Matrix::identity(8)));
  Matrix omega = Matrix::identity(16);
  for (const auto& g : gens) omega = omega * g;
  return {std::move(gens), std::move(omega)};
}

/// rho(2^k) - 1 anticommuting skew generators on R^(2^k).
std::vector<Matrix> skew_generators(unsigned k) {
  if (k < 4) return imaginary_units(std::size_t{1} << k);
  const auto inner = skew_generators(k - 4);
  const std::size_t m = std::size_t{1} << (k - 4);
  const auto [period, omega] = period_generators();
  std::vector<Matrix> out;
  for (const auto& f : period) out.push_back(kron(f, Matrix::identity(m)));
  for (const auto& g : inner) out.push_back(kron(omega, g));
  return out;
}

std::string pair_name(std::size_t i, std::size_t j) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

}  // namespace

CompositionFamily::CompositionFamily(std::int64_t r, std::int64_t s, std::int64_t n, std::vector<Matrix> matrices)
    : r_(r), s_(s), n_(n), matrices_(std::move(matrices)) {
  if (r < 0 || s < 1 || n < 1) throw StructuralError("composition family needs r >= 0 and s, n >= 1");
  if (n < std::max(r, s)) throw StructuralError("composition family needs n >= max(r, s)");
  if (static_cast<std::int64_t>(matrices_.size()) != r) {
    throw StructuralError("expected " + std::to_string(r) + " matrices, got " + std::to_string(matrices_.size()));
  }
  for (std::size_t i = 0; i < matrices_.size(); ++i) {
    if (static_cast<std::int64_t>(matrices_[i].rows()) != n || static_cast<std::int64_t>(matrices_[i].cols()) != s) {
      throw StructuralError("A_" + std::to_string(i + 1) + " must be " + std::to_string(n) + "x" + std::to_string(s));
    }
  }
}

Matrix CompositionFamily::left(std::span<const Rational> x) const {
  if (static_cast<std::int64_t>(x.size()) != r_) throw StructuralError("x has wrong length");
  Matrix l(static_cast<std::size_t>(n_), static_cast<std::size_t>(s_));
  for (std::size_t i = 0; i < matrices_.size(); ++i) {
    if (x[i] != 0) l += x[i] * matrices_[i];
  }
  return l;
}

Matrix CompositionFamily::right(std::span<const Rational> y) const {
  if (static_cast<std::int64_t>(y.size()) != s_) throw StructuralError("y has wrong length");
  Matrix out(static_cast<std::size_t>(n_), static_cast<std::size_t>(r_));
  for (std::size_t i = 0; i < matrices_.size(); ++i) {
    const auto column = conelab::apply(matrices_[i], y);
    for (std::size_t row = 0; row < column.size(); ++row) {
      if (column[row] != 0) out.set(row, i, column[row]);
    }
  }
  return out;
}

PolyMatrix CompositionFamily::symbolic_left(std::size_t variables, std::size_t x_offset) const {
  PolyMatrix l(static_cast<std::size_t>(n_), PolyVector(static_cast<std::size_t>(s_), Polynomial(variables)));
  for (std::size_t i = 0; i < matrices_.size(); ++i) {
    const Polynomial xi = Polynomial::variable(variables, x_offset + i);
    for (std::size_t row = 0; row < matrices_[i].rows(); ++row) {
      for (const auto& e : matrices_[i].row(row)) l[row][e.index] += e.value * xi;
    }
  }
  return l;
}

PolyMatrix CompositionFamily::symbolic_right(std::size_t variables, std::size_t y_offset) const {
  PolyMatrix rm(static_cast<std::size_t>(n_), PolyVector(static_cast<std::size_t>(r_), Polynomial(variables)));
  for (std::size_t i = 0; i < matrices_.size(); ++i) {
    for (std::size_t row = 0; row < matrices_[i].rows(); ++row) {
      for (const auto& e : matrices_[i].row(row)) {
        rm[row][i] += e.value * Polynomial::variable(variables, y_offset + e.index);
      }
    }
  }
  return rm;
}

std::int64_t hurwitz_radon_number(std::int64_t n) {
  if (n < 1) throw InvalidArgument("Hurwitz-Radon number needs n >= 1");
  std::int64_t twos = 0;
  while (n % 2 == 0) {
    n /= 2;
    ++twos;
  }
  return 8 * (twos / 4) + (std::int64_t{1} << (twos % 4));
}

CompositionFamily composition_family(std::int64_t r, std::int64_t n) {
  if (n < 1) throw InvalidArgument("n must be at least 1");
  const std::int64_t bound = hurwitz_radon_number(n);
  if (r < 1 || r > bound) {
    throw InvalidArgument("r = " + std::to_string(r) + " outside 1..rho(" + std::to_string(n) +
                          ") = " + std::to_string(bound));
  }
  unsigned twos = 0;
  std::int64_t odd = n;
  while (odd % 2 == 0) {
    odd /= 2;
    ++twos;
  }
  const auto generators = skew_generators(twos);
  const Matrix odd_identity = Matrix::identity(static_cast<std::size_t>(odd));
  std::vector<Matrix> matrices{Matrix::identity(static_cast<std::size_t>(n))};
  for (std::int64_t i = 1; i < r; ++i) {
    matrices.push_back(kron(generators[static_cast<std::size_t>(i - 1)], odd_identity));
  }
  return CompositionFamily(r, n, n, std::move(matrices));
}

CompositionFamily family_3_5_7() {
  // Columns of A_i are read off the coefficient of x_i in L(x).
  const Matrix a1 = Matrix::from_rows({{1, 0, 0, 0, 0},
                                       {0, 1, 0, 0, 0},
                                       {0, 0, 1, 0, 0},
                                       {0, 0, 0, 1, 0},
                                       {0, 0, 0, 0, 1},
                                       {0, 0, 0, 0, 0},
                                       {0, 0, 0, 0, 0}});
  const Matrix a2 = Matrix::from_rows({{0, 0, 0, 1, 0},
                                       {0, 0, -1, 0, 0},
                                       {0, 1, 0, 0, 0},
                                       {-1, 0, 0, 0, 0},
                                       {0, 0, 0, 0, 0},
                                       {0, 0, 0, 0, 1},
                                       {0, 0, 0, 0, 0}});
  const Matrix a3 = Matrix::from_rows({{0, 0, -1, 0, 0},
                                       {0, 0, 0, -1, 0},
                                       {1, 0, 0, 0, 0},
                                       {0, 1, 0, 0, 0},
                                       {0, 0, 0, 0, 0},
                                       {0, 0, 0, 0, 0},
                                       {0, 0, 0, 0, 1}});
  return CompositionFamily(3, 5, 7, {a1, a2, a3});
}

CompositionReport verify_composition(const CompositionFamily& family) {
  CompositionReport report;
  const auto& a = family.matrices();
  const auto s = static_cast<std::size_t>(family.s());
  for (std::size_t i = 0; i < a.size(); ++i) {
    const Matrix ai_t = a[i].transpose();
    for (std::size_t j = i; j < a.size(); ++j) {
      const Matrix product = ai_t * a[j];
      const Matrix sum = product + product.transpose();
      const Matrix expected = Matrix::scalar(s, i == j ? 2 : 0);
      if (sum != expected) {
        report.passed = false;
        report.failing_pair = {i + 1, j + 1};
        report.detail = "tA_i A_j + tA_j A_i != " + std::string(i == j ? "2I" : "0") + " for " +
                        pair_name(i + 1, j + 1);
        return report;
      }
    }
  }
  return report;
}

CompositionReport consistency_lr(const CompositionFamily& family) {
  CompositionReport report;
  const auto r = static_cast<std::size_t>(family.r());
  const auto s = static_cast<std::size_t>(family.s());
  const auto n = static_cast<std::size_t>(family.n());
  const std::size_t variables = r + s;
  const PolyMatrix l = family.symbolic_left(variables, 0);
  const PolyMatrix rm = family.symbolic_right(variables, r);

  for (std::size_t nu = 0; nu < n; ++nu) {
    Polynomial from_left(variables);
    for (std::size_t j = 0; j < s; ++j) from_left += l[nu][j] * Polynomial::variable(variables, r + j);
    Polynomial from_right(variables);
    for (std::size_t i = 0; i < r; ++i) from_right += rm[nu][i] * Polynomial::variable(variables, i);
    if (from_left != from_right) {
      report.passed = false;
      report.detail = "L(x)y and R(y)x differ in component " + std::to_string(nu + 1);
      return report;
    }
  }

  Polynomial norm_y(variables);
  for (std::size_t j = 0; j < s; ++j) {
    const Polynomial yj = Polynomial::variable(variables, r + j);
    norm_y += yj * yj;
  }
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t k = i; k < r; ++k) {
      Polynomial entry(variables);
      for (std::size_t nu = 0; nu < n; ++nu) entry += rm[nu][i] * rm[nu][k];
      const Polynomial expected = i == k ? norm_y : Polynomial(variables);
      if (entry != expected) {
        report.passed = false;
        report.failing_pair = {i + 1, k + 1};
        report.detail = "tR(y)R(y) != |y|^2 I at " + pair_name(i + 1, k + 1);
        return report;
      }
    }
  }
  return report;
}

}  // namespace conelab::rank3
