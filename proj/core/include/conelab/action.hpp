#pragma once

#include "conelab/realization.hpp"

namespace conelab {

/// rho(h) x = h x th, projected back onto V. Throws ConditionViolation
/// naming the offending block when the product leaves V, which means the
/// realization does not satisfy (V1)-(V3).
ConeElement rho_act(const Realization& v, const GroupElement& h, const ConeElement& x);

/// h1 h2, computed on matrices and projected back onto H.
GroupElement group_multiply(const Realization& v, const GroupElement& h1, const GroupElement& h2);

}  // namespace conelab
