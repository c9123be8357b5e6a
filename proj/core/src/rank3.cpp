#include "conelab/rank3.hpp"

#include "conelab/errors.hpp"
#include "conelab/ldl.hpp"
#include "conelab/linalg.hpp"

namespace conelab::rank3 {
namespace {

std::size_t dim_r(const CompositionFamily& f) { return static_cast<std::size_t>(f.r()); }
std::size_t dim_s(const CompositionFamily& f) { return static_cast<std::size_t>(f.s()); }
std::size_t dim_n(const CompositionFamily& f) { return static_cast<std::size_t>(f.n()); }

void require_length(const std::vector<Rational>& v, std::size_t expected, const char* name) {
  if (v.size() != expected) {
    throw StructuralError(std::string(name) + " has length " + std::to_string(v.size()) + ", expected " +
                          std::to_string(expected));
  }
}

void require_verified(const CompositionFamily& f) {
  const auto report = verify_composition(f);
  if (!report.passed) throw PreconditionError("composition family fails verification: " + report.detail);
}

Matrix unit_row(std::size_t length, std::size_t index) {
  Matrix m(1, length);
  m.set(0, index, 1);
  return m;
}

/// tR(y) z, i.e. (<A_i y, z>)_i.
std::vector<Rational> rt_times(const CompositionFamily& f, std::span<const Rational> y, std::span<const Rational> z) {
  std::vector<Rational> out;
  out.reserve(f.matrices().size());
  for (const auto& a : f.matrices()) out.push_back(dot(conelab::apply(a, y), z));
  return out;
}

/// tL(xi) zeta = sum_i xi_i tA_i zeta.
std::vector<Rational> lt_times(const CompositionFamily& f, std::span<const Rational> xi,
                               std::span<const Rational> zeta) {
  return conelab::apply(f.left(xi).transpose(), zeta);
}

std::vector<Rational> axpy(const Rational& a, std::span<const Rational> x, std::span<const Rational> y) {
  std::vector<Rational> out(y.begin(), y.end());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += a * x[i];
  return out;
}

std::vector<Rational> concat(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  std::vector<Rational> out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

}  // namespace

Rank3Element identity_point(const CompositionFamily& f) {
  return {1, 1, 1, std::vector<Rational>(dim_r(f)), std::vector<Rational>(dim_s(f)), std::vector<Rational>(dim_n(f))};
}

DualRank3Element identity_dual_point(const CompositionFamily& f) {
  return {1, 1, 1, std::vector<Rational>(dim_r(f)), std::vector<Rational>(dim_s(f)), std::vector<Rational>(dim_n(f))};
}

void check_shape(const CompositionFamily& f, const Rank3Element& x) {
  require_length(x.x, dim_r(f), "x");
  require_length(x.y, dim_s(f), "y");
  require_length(x.z, dim_n(f), "z");
}

void check_shape(const CompositionFamily& f, const DualRank3Element& xi) {
  require_length(xi.xi, dim_r(f), "xi");
  require_length(xi.eta, dim_s(f), "eta");
  require_length(xi.zeta, dim_n(f), "zeta");
}

Realization build_rank3_cone(const CompositionFamily& f) {
  require_verified(f);
  const std::size_t r = dim_r(f), s = dim_s(f), n = dim_n(f);
  std::vector<std::vector<Matrix>> bases(pair_count(3));

  if (r == 0) {
    for (std::size_t j = 0; j < s; ++j) bases[pair_index(1, 0)].push_back(unit_row(s + n, j));
    for (std::size_t nu = 0; nu < n; ++nu) bases[pair_index(2, 0)].push_back(unit_row(s + n, s + nu));
    return Realization(BlockPartition({s + n, 1, 1}), std::move(bases));
  }

  for (std::size_t j = 0; j < s; ++j) {
    std::vector<Rational> e(s);
    e[j] = 1;
    bases[pair_index(1, 0)].push_back(f.right(e).transpose());
  }
  for (std::size_t nu = 0; nu < n; ++nu) bases[pair_index(2, 0)].push_back(unit_row(n, nu));
  for (std::size_t i = 0; i < r; ++i) bases[pair_index(2, 1)].push_back(unit_row(r, i));
  return Realization(BlockPartition({n, r, 1}), std::move(bases));
}

Realization build_rank3_dual(const CompositionFamily& f) {
  require_verified(f);
  const std::size_t s = dim_s(f), n = dim_n(f);
  std::vector<std::vector<Matrix>> bases(pair_count(3));
  for (const auto& a : f.matrices()) bases[pair_index(1, 0)].push_back(a.transpose());
  for (std::size_t nu = 0; nu < n; ++nu) bases[pair_index(2, 0)].push_back(unit_row(n, nu));
  for (std::size_t j = 0; j < s; ++j) bases[pair_index(2, 1)].push_back(unit_row(s, j));
  return Realization(BlockPartition({n, s, 1}), std::move(bases));
}

ConeElement to_cone_element(const CompositionFamily& f, const Rank3Element& x) {
  check_shape(f, x);
  ConeElement c;
  c.diag = {x.x11, x.x22, x.x33};
  c.off = {x.y, x.z, x.x};
  return c;
}

Rank3Element from_cone_element(const CompositionFamily& f, const ConeElement& c) {
  if (c.diag.size() != 3 || c.off.size() != 3) throw StructuralError("expected a rank-3 element");
  Rank3Element x{c.diag[0], c.diag[1], c.diag[2], c.at(2, 1), c.at(1, 0), c.at(2, 0)};
  check_shape(f, x);
  return x;
}

ConeElement to_cone_element(const CompositionFamily& f, const DualRank3Element& xi) {
  check_shape(f, xi);
  ConeElement c;
  c.diag = {xi.xi33, xi.xi22, xi.xi11};
  c.off = {xi.xi, xi.zeta, xi.eta};
  return c;
}

DualRank3Element dual_from_cone_element(const CompositionFamily& f, const ConeElement& c) {
  if (c.diag.size() != 3 || c.off.size() != 3) throw StructuralError("expected a rank-3 element");
  DualRank3Element xi{c.diag[2], c.diag[1], c.diag[0], c.at(1, 0), c.at(2, 1), c.at(2, 0)};
  check_shape(f, xi);
  return xi;
}

Matrix embed_dual_upper(const CompositionFamily& f, const DualRank3Element& xi) {
  check_shape(f, xi);
  const std::size_t s = dim_s(f), n = dim_n(f);
  Matrix m(1 + s + n, 1 + s + n);
  m.set(0, 0, xi.xi11);
  for (std::size_t j = 0; j < s; ++j) {
    m.set(0, 1 + j, xi.eta[j]);
    m.set(1 + j, 0, xi.eta[j]);
    m.set(1 + j, 1 + j, xi.xi22);
  }
  for (std::size_t nu = 0; nu < n; ++nu) {
    m.set(0, 1 + s + nu, xi.zeta[nu]);
    m.set(1 + s + nu, 0, xi.zeta[nu]);
    m.set(1 + s + nu, 1 + s + nu, xi.xi33);
  }
  const Matrix l = f.left(xi.xi);
  m.set_block(1 + s, 1, l);
  m.set_block(1, 1 + s, l.transpose());
  return m;
}

ConeElement coupling_partner(const CompositionFamily& f, const DualRank3Element& xi) {
  check_shape(f, xi);
  ConeElement c;
  c.diag = {xi.xi11, xi.xi22, xi.xi33};
  c.off = {xi.eta, xi.zeta, xi.xi};
  return c;
}

Rational det_rank3_closed(const CompositionFamily& f, const Rank3Element& x) {
  check_shape(f, x);
  const long r = static_cast<long>(f.r()), s = static_cast<long>(f.s()), n = static_cast<long>(f.n());
  const Rational yy = squared_norm(x.y);
  const Rational zz = squared_norm(x.z);
  const Rational delta2 = x.x11 * x.x22 - yy;
  if (r == 0) return power(x.x11, s + n - 2) * delta2 * (x.x11 * x.x33 - zz);

  const auto rz = rt_times(f, x.y, x.z);
  if (n == r) {
    // x11 divides the last factor when R(y) is square.
    const Rational cubic = x.x11 * x.x22 * x.x33 - x.x22 * zz - x.x33 * yy - x.x11 * squared_norm(x.x) +
                           2 * dot(x.x, rz);
    return power(delta2, r - 1) * cubic;
  }
  std::vector<Rational> w(x.x.size());
  for (std::size_t i = 0; i < w.size(); ++i) w[i] = x.x11 * x.x[i] - rz[i];
  const Rational factor = delta2 * (x.x11 * x.x33 - zz) - squared_norm(w);
  return power(x.x11, n - r - 1) * power(delta2, r - 1) * factor;
}

Rational det_rank3_dual_closed(const CompositionFamily& f, const DualRank3Element& xi) {
  check_shape(f, xi);
  const long s = static_cast<long>(f.s()), n = static_cast<long>(f.n());
  const Rational xixi = squared_norm(xi.xi);
  const Rational zz = squared_norm(xi.zeta);
  const Rational ee = squared_norm(xi.eta);
  const Rational delta2 = xi.xi22 * xi.xi33 - xixi;
  const auto lz = lt_times(f, xi.xi, xi.zeta);
  if (n == s) {
    const Rational cubic = xi.xi11 * xi.xi22 * xi.xi33 + 2 * dot(xi.eta, lz) - xi.xi11 * xixi - xi.xi22 * zz -
                           xi.xi33 * ee;
    return power(delta2, s - 1) * cubic;
  }
  std::vector<Rational> w(xi.eta.size());
  for (std::size_t j = 0; j < w.size(); ++j) w[j] = xi.xi33 * xi.eta[j] - lz[j];
  const Rational factor = (xi.xi11 * xi.xi33 - zz) * delta2 - squared_norm(w);
  return power(xi.xi33, n - s - 1) * power(delta2, s - 1) * factor;
}

Rational coupling(const Rank3Element& x, const DualRank3Element& xi) {
  if (x.x.size() != xi.xi.size() || x.y.size() != xi.eta.size() || x.z.size() != xi.zeta.size()) {
    throw StructuralError("coupling of elements from different families");
  }
  return x.x11 * xi.xi11 + x.x22 * xi.xi22 + x.x33 * xi.xi33 +
         2 * (dot(x.x, xi.xi) + dot(x.y, xi.eta) + dot(x.z, xi.zeta));
}

DecompositionCheck coupling_decomposition_check(const CompositionFamily& f, const Rank3Element& x,
                                                const DualRank3Element& xi) {
  check_shape(f, x);
  check_shape(f, xi);
  const std::size_t s = dim_s(f), n = dim_n(f);
  DecompositionCheck out;
  out.lhs = coupling(x, xi);

  if (x.x11 <= 0) throw PreconditionError("x11 must be positive");
  if (xi.xi33 <= 0) throw PreconditionError("xi33 must be positive");
  out.x22_tilde = x.x22 - squared_norm(x.y) / x.x11;
  if (out.x22_tilde <= 0) throw PreconditionError("x22~ must be positive");
  out.xi22_tilde = xi.xi22 - squared_norm(xi.xi) / xi.xi33;
  if (out.xi22_tilde <= 0) throw PreconditionError("xi22~ must be positive");

  const Rational inv_x11 = 1 / x.x11;
  const auto x_tilde = axpy(-inv_x11, rt_times(f, x.y, x.z), x.x);
  const Rational x33_tilde = x.x33 - squared_norm(x.z) / x.x11;
  out.x33_ddot = x33_tilde - squared_norm(x_tilde) / out.x22_tilde;

  Matrix xi_tilde(s + n, s + n);
  for (std::size_t j = 0; j < s; ++j) xi_tilde.set(j, j, xi.xi22);
  for (std::size_t nu = 0; nu < n; ++nu) xi_tilde.set(s + nu, s + nu, xi.xi33);
  const Matrix l = f.left(xi.xi);
  xi_tilde.set_block(s, 0, l);
  xi_tilde.set_block(0, s, l.transpose());

  const auto eta_zeta = concat(xi.eta, xi.zeta);
  const auto b = solve_square(xi_tilde, eta_zeta);
  if (!b) throw InternalInvariant("Xi~ is singular although xi33 and xi22~ are positive");
  out.xi11_ddot = xi.xi11 - dot(eta_zeta, *b);

  const auto c = axpy(inv_x11, concat(x.y, x.z), *b);
  const auto d = axpy(1 / out.x22_tilde, x_tilde, axpy(1 / xi.xi33, xi.xi, std::vector<Rational>(xi.xi.size())));

  out.rhs = x.x11 * (out.xi11_ddot + dot(c, conelab::apply(xi_tilde, c))) +
            out.x22_tilde * (out.xi22_tilde + xi.xi33 * squared_norm(d)) + out.x33_ddot * xi.xi33;
  out.holds = out.lhs == out.rhs;
  return out;
}

DualityReport duality_check(const CompositionFamily& f, RationalSampler& sampler, std::size_t samples) {
  const Realization primal = build_rank3_cone(f);
  const Realization dual = build_rank3_dual(f);
  DualityReport report;
  for (std::size_t i = 0; i < samples; ++i) {
    const auto x = from_cone_element(f, random_interior(primal, sampler));
    const auto xi = dual_from_cone_element(f, random_interior(dual, sampler));
    ++report.pairs;
    if (!coupling_decomposition_check(f, x, xi).holds) ++report.decomposition_failures;
    if (coupling(x, xi) <= 0) ++report.positivity_failures;

    const auto boundary = random_boundary(primal, sampler, i % 3);
    if (boundary.is_zero()) continue;
    ++report.boundary_samples;
    if (coupling(from_cone_element(f, boundary), xi) <= 0) ++report.positivity_failures;
  }
  return report;
}

}  // namespace conelab::rank3
