#pragma once

#include <cstddef>
#include <vector>

#include "conelab/realization.hpp"

namespace conelab {

enum class LdlStatus {
  complete,
  /// A zero pivot met a nonzero remaining column: x is neither in the cone
  /// nor on its boundary.
  breakdown,
};

/// embed(x) = embed(unit) * diag(d_1 I, ..., d_r I) * t(embed(unit)).
struct LdlResult {
  GroupElement unit;
  std::vector<Rational> pivots;  // one per block; truncated on breakdown
  LdlStatus status = LdlStatus::complete;
  bool is_member = false;

  /// Every pivot nonnegative and no breakdown: x lies in the closed cone.
  bool in_closure() const;
};

/// Square-root-free block elimination carried out in V-coordinates. Each
/// Schur complement stays in V by (V2)/(V3), so a pivot is one scalar per
/// block.
LdlResult ldl_decompose(const Realization& v, const ConeElement& x);

/// prod_i d_i^{n_i}. Throws PreconditionError after a breakdown.
Rational determinant_from_pivots(const Realization& v, const LdlResult& ldl);

}  // namespace conelab
