#pragma once

#include <cstddef>
#include <optional>
#include <span>

#include "conelab/realization.hpp"

namespace conelab {

struct PairingReport {
  bool all_positive = true;
  std::size_t checked = 0;
  std::size_t skipped_zero = 0;
  std::optional<std::size_t> first_failure;
  Rational failure_value;
};

/// Checks <x, y>_V > 0 for every nonzero sample x. Samples must lie in
/// the closed cone (checked through their LDL pivots; PreconditionError
/// otherwise). A necessary condition for y in the dual cone, not a
/// decision procedure.
PairingReport dual_pairing_positive(const Realization& v, const ConeElement& y,
                                    std::span<const ConeElement> samples);

}  // namespace conelab
