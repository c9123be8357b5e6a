#pragma once

#include <cstddef>

#include "conelab/realization.hpp"

namespace conelab {

inline constexpr std::size_t kDefaultRankCap = 12;

/// The rank-1 datum: partition (1), no off-diagonal spaces.
Realization half_line();

/// Adjoins a leading block of size 2 n_1. The new V_21 is spanned by
/// (I 0) and (0 I); each new V_{k+1,1} by (E_a 0) for all a, then (0 E_a),
/// over the basis E_a of V_k1; every other space is copied with its
/// indices shifted by one. Throws PreconditionError unless the input
/// passes verify_v_conditions.
Realization double_realization(const Realization& v);

/// Same construction without re-verifying the input.
Realization double_unchecked(const Realization& v);

/// Applies the doubling rank-1 times to the half line: partition
/// (2^(r-1), ..., 2, 1) with d_kj = 2^(k-j). Throws InvalidArgument for
/// rank 0 or rank > cap.
Realization iterate_construction(std::size_t rank, std::size_t cap = kDefaultRankCap);

}  // namespace conelab
