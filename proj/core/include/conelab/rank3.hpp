#pragma once

#include <cstddef>
#include <vector>

#include "conelab/composition.hpp"
#include "conelab/realization.hpp"
#include "conelab/sampler.hpp"

namespace conelab::rank3 {

/// X = [[x11 I_n, R(y), z], [tR(y), x22 I_r, x], [tz, tx, x33]].
/// For r = 0 the block diagonal layout [[x11 I_s, 0, y, 0], [0, x11 I_n, 0, z], ...].
struct Rank3Element {
  Rational x11;
  Rational x22;
  Rational x33;
  std::vector<Rational> x;  // r
  std::vector<Rational> y;  // s
  std::vector<Rational> z;  // n

  friend bool operator==(const Rank3Element&, const Rank3Element&) = default;
};

/// Xi = [[xi11, t(eta), t(zeta)], [eta, xi22 I_s, tL(xi)], [zeta, L(xi), xi33 I_n]].
struct DualRank3Element {
  Rational xi11;
  Rational xi22;
  Rational xi33;
  std::vector<Rational> xi;    // r
  std::vector<Rational> eta;   // s
  std::vector<Rational> zeta;  // n

  friend bool operator==(const DualRank3Element&, const DualRank3Element&) = default;
};

Rank3Element identity_point(const CompositionFamily& f);
DualRank3Element identity_dual_point(const CompositionFamily& f);

/// Throw StructuralError when vector lengths do not match (r, s, n).
void check_shape(const CompositionFamily& f, const Rank3Element& x);
void check_shape(const CompositionFamily& f, const DualRank3Element& xi);

/// Partition (n, r, 1) with V_21 = {tR(y)}, V_31 = {tz}, V_32 = {tx}; for
/// r = 0 the partition is (s + n, 1, 1). Throws PreconditionError when the
/// family fails verify_composition.
Realization build_rank3_cone(const CompositionFamily& f);

/// The dual cone as a lower realization: the blocks of Xi in reverse order,
/// partition (n, s, 1) with V_21 = {tL(xi)}, V_31 = {t(zeta)}, V_32 = {t(eta)}.
/// Measured dims are (d32, d21, d31) = (s, r, n).
Realization build_rank3_dual(const CompositionFamily& f);

/// Coordinates in build_rank3_cone(f): diag (x11, x22, x33), V_21 <- y,
/// V_31 <- z, V_32 <- x.
ConeElement to_cone_element(const CompositionFamily& f, const Rank3Element& x);
Rank3Element from_cone_element(const CompositionFamily& f, const ConeElement& c);

/// Coordinates in build_rank3_dual(f): diag (xi33, xi22, xi11), V_21 <- xi,
/// V_31 <- zeta, V_32 <- eta.
ConeElement to_cone_element(const CompositionFamily& f, const DualRank3Element& xi);
DualRank3Element dual_from_cone_element(const CompositionFamily& f, const ConeElement& c);

/// The (1 + s + n) matrix Xi in its upper triangular layout.
Matrix embed_dual_upper(const CompositionFamily& f, const DualRank3Element& xi);

/// Element of build_rank3_cone(f) whose inner product with X is coupling(X, Xi).
ConeElement coupling_partner(const CompositionFamily& f, const DualRank3Element& xi);

/// det X from the closed form; the block diagonal formula when r = 0.
Rational det_rank3_closed(const CompositionFamily& f, const Rank3Element& x);
/// det Xi from the closed form.
Rational det_rank3_dual_closed(const CompositionFamily& f, const DualRank3Element& xi);

/// x11 xi11 + x22 xi22 + x33 xi33 + 2<x, xi> + 2<y, eta> + 2<z, zeta>
Rational coupling(const Rank3Element& x, const DualRank3Element& xi);

struct DecompositionCheck {
  bool holds = false;
  Rational lhs;  // coupling(X, Xi)
  Rational rhs;  // x11 (xi11'' + tC Xi~ C) + x22~ (xi22~ + xi33 |d|^2) + x33'' xi33
  Rational x22_tilde;
  Rational x33_ddot;
  Rational xi22_tilde;
  Rational xi11_ddot;
};

/// Evaluates both sides of the Schur decomposition of the coupling. Throws
/// PreconditionError unless x11, x22~, xi33 and xi22~ are all positive.
DecompositionCheck coupling_decomposition_check(const CompositionFamily& f, const Rank3Element& x,
                                                const DualRank3Element& xi);

struct DualityReport {
  std::size_t pairs = 0;
  std::size_t decomposition_failures = 0;
  std::size_t positivity_failures = 0;
  std::size_t boundary_samples = 0;

  bool passed() const { return decomposition_failures == 0 && positivity_failures == 0; }
};

/// Samples interior X (and boundary X with one zero pivot) of the primal
/// cone and interior Xi of the dual cone; checks the decomposition identity
/// on interior pairs and coupling > 0 on all pairs.
DualityReport duality_check(const CompositionFamily& f, RationalSampler& sampler, std::size_t samples);

}  // namespace conelab::rank3
