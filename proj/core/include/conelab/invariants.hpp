#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "conelab/degrees.hpp"
#include "conelab/rank3.hpp"

namespace conelab::rank3 {

enum class Side { primal, dual };

/// Basic relative invariants as polynomials. Primal variables are
/// (x11, x22, x33, x_1..x_r, y_1..y_s, z_1..z_n); dual variables are
/// (xi11, xi22, xi33, xi_1..xi_r, eta_1..eta_s, zeta_1..zeta_n).
/// polys[j] is Delta_{j+1} (primal) or Delta'_{j+1} (dual).
struct InvariantList {
  Side side = Side::primal;
  std::vector<Polynomial> polys;
  std::vector<std::string> names;

  std::vector<std::int64_t> degrees() const;
};

std::vector<Rational> variables_of(const Rank3Element& x);
std::vector<Rational> variables_of(const DualRank3Element& xi);

/// Closed-form invariants of the rank-3 cone or its dual.
///   primal: x11, x11 x22 - |y|^2, then the quartic factor of det X, or the
///           cubic (quartic / x11) when r = n; for r = 0, x11 x33 - |z|^2.
///   dual:   the quartic factor of det Xi (cubic when s = n), then
///           xi22 xi33 - |xi|^2, then xi33; for r = 0 the cubic, xi22, xi33.
InvariantList closed_form_invariants(const CompositionFamily& f, Side side);

/// The realization whose lower triangular group acts on the side: the
/// primal cone, or the dual in reversed block order.
Realization realization_for(const CompositionFamily& f, Side side);

/// sigma row used for invariant j: j on the primal side, 2 - j on the dual
/// side (the reversed realization scans Delta'_3 first).
std::size_t sigma_row(Side side, std::size_t j);

struct InvarianceWitness {
  std::size_t j = 0;  // 0-based index into the invariant list
  GroupElement h;
  ConeElement x;
  Rational lhs;  // Delta_j(rho(h) x)
  Rational rhs;  // chi_j(h) Delta_j(x)
};

struct InvarianceReport {
  bool passed = true;
  std::size_t checked = 0;
  std::optional<InvarianceWitness> witness;
};

/// Delta_j(rho(h) x) = chi_j(h) Delta_j(x) for every j at a single (h, x).
InvarianceReport relative_invariance_at(const CompositionFamily& f, const InvariantList& list,
                                        const SigmaMatrix& sigma, const GroupElement& h, const ConeElement& x);
/// As above with v = realization_for(f, list.side) already built.
InvarianceReport relative_invariance_at(const Realization& v, const CompositionFamily& f, const InvariantList& list,
                                        const SigmaMatrix& sigma, const GroupElement& h, const ConeElement& x);

/// The same identity at `samples` random pairs (h, x), alternating full,
/// diagonal and unipotent h. sigma belongs to the measured dims of
/// realization_for(f, list.side).
InvarianceReport relative_invariance_check(const CompositionFamily& f, const InvariantList& list,
                                           const SigmaMatrix& sigma, RationalSampler& sampler,
                                           std::size_t samples);

/// |tL(xi) zeta|^2 = |L(xi) zeta|^2 = |xi|^2 |zeta|^2 as polynomial identities
/// (meaningful when s = n).
bool orthogonal_split_holds(const CompositionFamily& f);

/// (y, z) with |tR(y) z|^2 != |y|^2 |z|^2, searched over unit vectors.
std::optional<std::pair<std::vector<Rational>, std::vector<Rational>>> norm_defect_witness(
    const CompositionFamily& f);

struct DegreeClassification {
  int case_number = 0;
  /// The input had r > s and was classified as the dual of (s, r, n).
  bool swapped = false;
  std::array<std::int64_t, 3> normalized{};
  std::array<std::int64_t, 3> primal{};
  std::array<std::int64_t, 3> dual{};
  /// Case 1 requires n in {1, 2, 4, 8}; case 2 requires r <= rho(n).
  std::string condition;
};

/// Four-case degree table for (d32, d21, d31) = (r, s, n). Degrees are
/// reported for the input triple; when r > s they are read off the
/// normalized (s, r, n) with primal and dual exchanged and reversed.
/// Throws InvalidArgument for negative entries or s = n = 0, NotRealizable
/// when n < max(r, s), case 1 with n not in {1, 2, 4, 8}, or case 2 with
/// r > rho(n), and InternalInvariant if the table disagrees with the sigma
/// algorithm.
DegreeClassification classify_degrees(std::int64_t r, std::int64_t s, std::int64_t n);

}  // namespace conelab::rank3
