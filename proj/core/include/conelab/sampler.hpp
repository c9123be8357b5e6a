#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "conelab/realization.hpp"

namespace conelab {

struct SamplerBounds {
  std::int64_t numerator = 100;   // |p| <= numerator
  std::int64_t denominator = 10;  // 1 <= q <= denominator
};

/// Deterministic random rationals p/q; the seed fixes the whole sequence.
class RationalSampler {
 public:
  explicit RationalSampler(std::uint64_t seed, SamplerBounds bounds = {});

  Rational next();
  Rational next_nonzero();
  Rational next_positive();
  std::vector<Rational> vector(std::size_t n);
  /// Uniform integer in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);

  const SamplerBounds& bounds() const { return bounds_; }

 private:
  std::mt19937_64 engine_;
  SamplerBounds bounds_;
};

enum class GroupSample { full, diagonal, unipotent };

ConeElement random_element(const Realization& v, RationalSampler& sampler);
GroupElement random_group_element(const Realization& v, RationalSampler& sampler,
                                  GroupSample kind = GroupSample::full);

/// rho(h)(identity) for random h: always an interior point.
ConeElement random_interior(const Realization& v, RationalSampler& sampler);
/// rho(h)(d) where d is the identity with block `zero_block` set to 0: a
/// boundary point of the cone.
ConeElement random_boundary(const Realization& v, RationalSampler& sampler, std::size_t zero_block);

}  // namespace conelab
