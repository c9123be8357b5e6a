#include "conelab/invariants.hpp"

#include <algorithm>

#include "conelab/action.hpp"
#include "conelab/errors.hpp"

namespace conelab::rank3 {
namespace {

/// Variable handles for one side of a family.
struct Symbols {
  std::size_t count;
  Polynomial d1, d2, d3;  // x11, x22, x33 or xi11, xi22, xi33
  PolyVector u, v, w;     // (x, y, z) or (xi, eta, zeta)
};

Symbols symbols(const CompositionFamily& f) {
  const auto r = static_cast<std::size_t>(f.r());
  const auto s = static_cast<std::size_t>(f.s());
  const auto n = static_cast<std::size_t>(f.n());
  const std::size_t count = 3 + r + s + n;
  Symbols out{count,
              Polynomial::variable(count, 0),
              Polynomial::variable(count, 1),
              Polynomial::variable(count, 2),
              {},
              {},
              {}};
  for (std::size_t i = 0; i < r; ++i) out.u.push_back(Polynomial::variable(count, 3 + i));
  for (std::size_t j = 0; j < s; ++j) out.v.push_back(Polynomial::variable(count, 3 + r + j));
  for (std::size_t nu = 0; nu < n; ++nu) out.w.push_back(Polynomial::variable(count, 3 + r + s + nu));
  return out;
}

/// t(m) v for a symbolic matrix m.
PolyVector transpose_times(const PolyMatrix& m, const PolyVector& v, std::size_t cols, std::size_t count) {
  PolyVector out(cols, Polynomial(count));
  for (std::size_t row = 0; row < m.size(); ++row) {
    for (std::size_t c = 0; c < cols; ++c) out[c] += m[row][c] * v[row];
  }
  return out;
}

PolyVector times(const PolyMatrix& m, const PolyVector& v, std::size_t count) {
  PolyVector out(m.size(), Polynomial(count));
  for (std::size_t row = 0; row < m.size(); ++row) {
    for (std::size_t c = 0; c < v.size(); ++c) out[row] += m[row][c] * v[c];
  }
  return out;
}

std::vector<Rational> unit(std::size_t length, std::size_t index) {
  std::vector<Rational> e(length);
  e[index] = 1;
  return e;
}

InvariantList primal_invariants(const CompositionFamily& f) {
  const Symbols x = symbols(f);
  const std::size_t c = x.count;
  const Polynomial yy = squared_norm(x.v, c);
  const Polynomial zz = squared_norm(x.w, c);
  InvariantList out;
  out.side = Side::primal;
  out.names = {"Delta_1", "Delta_2", "Delta_3"};
  out.polys.push_back(x.d1);
  out.polys.push_back(x.d1 * x.d2 - yy);

  if (f.r() == 0) {
    out.polys.push_back(x.d1 * x.d3 - zz);
    return out;
  }
  const auto r = static_cast<std::size_t>(f.r());
  const PolyVector rz = transpose_times(f.symbolic_right(c, 3 + r), x.w, r, c);
  if (f.r() == f.n()) {
    out.polys.push_back(x.d1 * x.d2 * x.d3 - x.d2 * zz - x.d3 * yy - x.d1 * squared_norm(x.u, c) +
                        Rational(2) * dot(x.u, rz, c));
    return out;
  }
  PolyVector defect;
  for (std::size_t i = 0; i < r; ++i) defect.push_back(x.d1 * x.u[i] - rz[i]);
  out.polys.push_back((x.d1 * x.d2 - yy) * (x.d1 * x.d3 - zz) - squared_norm(defect, c));
  return out;
}

InvariantList dual_invariants(const CompositionFamily& f) {
  const Symbols xi = symbols(f);
  const std::size_t c = xi.count;
  const auto s = static_cast<std::size_t>(f.s());
  const Polynomial xixi = squared_norm(xi.u, c);
  const Polynomial ee = squared_norm(xi.v, c);
  const Polynomial zz = squared_norm(xi.w, c);
  InvariantList out;
  out.side = Side::dual;
  out.names = {"Delta'_1", "Delta'_2", "Delta'_3"};

  if (f.r() == 0) {
    out.polys = {xi.d1 * xi.d2 * xi.d3 - xi.d2 * zz - xi.d3 * ee, xi.d2, xi.d3};
    return out;
  }
  const PolyVector lz = transpose_times(f.symbolic_left(c, 3), xi.w, s, c);
  if (f.s() == f.n()) {
    out.polys.push_back(xi.d1 * xi.d2 * xi.d3 + Rational(2) * dot(xi.v, lz, c) - xi.d1 * xixi - xi.d2 * zz -
                        xi.d3 * ee);
  } else {
    PolyVector defect;
    for (std::size_t j = 0; j < s; ++j) defect.push_back(xi.d3 * xi.v[j] - lz[j]);
    out.polys.push_back((xi.d1 * xi.d3 - zz) * (xi.d2 * xi.d3 - xixi) - squared_norm(defect, c));
  }
  out.polys.push_back(xi.d2 * xi.d3 - xixi);
  out.polys.push_back(xi.d3);
  return out;
}

std::vector<Rational> variables_for(const CompositionFamily& f, Side side, const ConeElement& c) {
  return side == Side::primal ? variables_of(from_cone_element(f, c)) : variables_of(dual_from_cone_element(f, c));
}

}  // namespace

std::vector<std::int64_t> InvariantList::degrees() const {
  std::vector<std::int64_t> out;
  for (const auto& p : polys) out.push_back(p.total_degree());
  return out;
}

std::vector<Rational> variables_of(const Rank3Element& x) {
  std::vector<Rational> out{x.x11, x.x22, x.x33};
  out.insert(out.end(), x.x.begin(), x.x.end());
  out.insert(out.end(), x.y.begin(), x.y.end());
  out.insert(out.end(), x.z.begin(), x.z.end());
  return out;
}

std::vector<Rational> variables_of(const DualRank3Element& xi) {
  std::vector<Rational> out{xi.xi11, xi.xi22, xi.xi33};
  out.insert(out.end(), xi.xi.begin(), xi.xi.end());
  out.insert(out.end(), xi.eta.begin(), xi.eta.end());
  out.insert(out.end(), xi.zeta.begin(), xi.zeta.end());
  return out;
}

InvariantList closed_form_invariants(const CompositionFamily& f, Side side) {
  return side == Side::primal ? primal_invariants(f) : dual_invariants(f);
}

Realization realization_for(const CompositionFamily& f, Side side) {
  return side == Side::primal ? build_rank3_cone(f) : build_rank3_dual(f);
}

std::size_t sigma_row(Side side, std::size_t j) { return side == Side::primal ? j : 2 - j; }

InvarianceReport relative_invariance_at(const CompositionFamily& f, const InvariantList& list,
                                        const SigmaMatrix& sigma, const GroupElement& h, const ConeElement& x) {
  const Realization v = realization_for(f, list.side);
  return relative_invariance_at(v, f, list, sigma, h, x);
}

InvarianceReport relative_invariance_at(const Realization& v, const CompositionFamily& f, const InvariantList& list,
                                        const SigmaMatrix& sigma, const GroupElement& h, const ConeElement& x) {
  if (sigma.rank() != 3 || list.polys.size() != 3) throw StructuralError("rank-3 invariants expected");
  const ConeElement moved = rho_act(v, h, x);
  const auto before = variables_for(f, list.side, x);
  const auto after = variables_for(f, list.side, moved);
  InvarianceReport report;
  for (std::size_t j = 0; j < list.polys.size(); ++j) {
    ++report.checked;
    const Rational lhs = list.polys[j].evaluate(after);
    const Rational rhs = character_value(sigma, sigma_row(list.side, j), h) * list.polys[j].evaluate(before);
    if (lhs != rhs) {
      report.passed = false;
      report.witness = InvarianceWitness{j, h, x, lhs, rhs};
      return report;
    }
  }
  return report;
}

InvarianceReport relative_invariance_check(const CompositionFamily& f, const InvariantList& list,
                                           const SigmaMatrix& sigma, RationalSampler& sampler,
                                           std::size_t samples) {
  const Realization v = realization_for(f, list.side);
  constexpr GroupSample kinds[] = {GroupSample::full, GroupSample::diagonal, GroupSample::unipotent};
  InvarianceReport total;
  for (std::size_t i = 0; i < samples; ++i) {
    const GroupElement h = random_group_element(v, sampler, kinds[i % 3]);
    const ConeElement x = random_element(v, sampler);
    auto report = relative_invariance_at(v, f, list, sigma, h, x);
    total.checked += report.checked;
    if (!report.passed) {
      total.passed = false;
      total.witness = std::move(report.witness);
      return total;
    }
  }
  return total;
}

bool orthogonal_split_holds(const CompositionFamily& f) {
  if (f.s() != f.n()) return false;
  const Symbols xi = symbols(f);
  const std::size_t c = xi.count;
  const PolyMatrix l = f.symbolic_left(c, 3);
  const Polynomial expected = squared_norm(xi.u, c) * squared_norm(xi.w, c);
  const auto s = static_cast<std::size_t>(f.s());
  return squared_norm(transpose_times(l, xi.w, s, c), c) == expected &&
         squared_norm(times(l, xi.w, c), c) == expected;
}

std::optional<std::pair<std::vector<Rational>, std::vector<Rational>>> norm_defect_witness(
    const CompositionFamily& f) {
  const auto s = static_cast<std::size_t>(f.s());
  const auto n = static_cast<std::size_t>(f.n());
  for (std::size_t j = 0; j < s; ++j) {
    const Matrix rt = f.right(unit(s, j)).transpose();
    for (std::size_t nu = 0; nu < n; ++nu) {
      const auto z = unit(n, nu);
      if (squared_norm(conelab::apply(rt, z)) != 1) return std::make_pair(unit(s, j), z);
    }
  }
  return std::nullopt;
}

DegreeClassification classify_degrees(std::int64_t r, std::int64_t s, std::int64_t n) {
  if (r < 0 || s < 0 || n < 0) throw InvalidArgument("triple entries must be nonnegative");
  if (n < std::max(r, s)) throw NotRealizable("n must be at least max(r, s)");

  DegreeClassification out;
  out.swapped = r > s;
  const std::int64_t a = std::min(r, s), b = std::max(r, s);
  if (b == 0 || n == 0) throw InvalidArgument("s and n must be at least 1 when r = 0");
  out.normalized = {a, b, n};

  std::array<std::int64_t, 3> primal{}, dual{};
  if (a == 0) {
    out.case_number = 4;
    primal = {1, 2, 2};
    dual = {3, 1, 1};
  } else if (a == b && b == n) {
    out.case_number = 1;
    if (n != 1 && n != 2 && n != 4 && n != 8) {
      throw NotRealizable("r = s = n requires n in {1, 2, 4, 8}, got " + std::to_string(n));
    }
    out.condition = "n in {1, 2, 4, 8}";
    primal = {1, 2, 3};
    dual = {3, 2, 1};
  } else if (b == n) {
    out.case_number = 2;
    const std::int64_t bound = hurwitz_radon_number(n);
    if (a > bound) {
      throw NotRealizable("r < s = n requires r <= rho(n) = " + std::to_string(bound) + ", got r = " +
                          std::to_string(a));
    }
    out.condition = "r <= rho(n) = " + std::to_string(bound);
    primal = {1, 2, 4};
    dual = {3, 2, 1};
  } else {
    out.case_number = 3;
    primal = {1, 2, 4};
    dual = {4, 2, 1};
  }

  if (out.swapped) {
    std::reverse(primal.begin(), primal.end());
    std::reverse(dual.begin(), dual.end());
    std::swap(primal, dual);
  }
  out.primal = primal;
  out.dual = dual;

  const auto from_sigma = degrees_from_sigma(sigma_from_dims(DimTable::rank3(r, s, n)));
  const auto from_dual = dual_degrees_rank3(r, s, n);
  if (!std::equal(primal.begin(), primal.end(), from_sigma.begin(), from_sigma.end()) ||
      !std::equal(dual.begin(), dual.end(), from_dual.begin(), from_dual.end())) {
    throw InternalInvariant("degree table disagrees with the sigma algorithm for (" + std::to_string(r) + ", " +
                            std::to_string(s) + ", " + std::to_string(n) + ")");
  }
  return out;
}

}  // namespace conelab::rank3
