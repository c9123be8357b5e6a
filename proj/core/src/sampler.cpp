#include "conelab/sampler.hpp"

#include "conelab/action.hpp"
#include "conelab/errors.hpp"

namespace conelab {

RationalSampler::RationalSampler(std::uint64_t seed, SamplerBounds bounds) : engine_(seed), bounds_(bounds) {
  if (bounds_.numerator < 1 || bounds_.denominator < 1) {
    throw InvalidArgument("sampler bounds must be positive");
  }
}

std::int64_t RationalSampler::uniform(std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(engine_);
}

Rational RationalSampler::next() {
  const std::int64_t p = uniform(-bounds_.numerator, bounds_.numerator);
  const std::int64_t q = uniform(1, bounds_.denominator);
  Rational value(Integer(std::to_string(p)), Integer(std::to_string(q)));
  value.canonicalize();
  return value;
}

Rational RationalSampler::next_nonzero() {
  for (;;) {
    Rational value = next();
    if (value != 0) return value;
  }
}

Rational RationalSampler::next_positive() {
  Rational value = next_nonzero();
  return value < 0 ? Rational(-value) : value;
}

std::vector<Rational> RationalSampler::vector(std::size_t n) {
  std::vector<Rational> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(next());
  return out;
}

ConeElement random_element(const Realization& v, RationalSampler& sampler) {
  ConeElement x = v.zero_element();
  for (auto& d : x.diag) d = sampler.next();
  for (auto& coords : x.off) {
    for (auto& c : coords) c = sampler.next();
  }
  return x;
}

GroupElement random_group_element(const Realization& v, RationalSampler& sampler, GroupSample kind) {
  GroupElement h = v.identity_group();
  if (kind != GroupSample::unipotent) {
    for (auto& t : h.diag) t = sampler.next_nonzero();
  }
  if (kind != GroupSample::diagonal) {
    for (auto& coords : h.lower) {
      for (auto& c : coords) c = sampler.next();
    }
  }
  return h;
}

ConeElement random_interior(const Realization& v, RationalSampler& sampler) {
  return rho_act(v, random_group_element(v, sampler), v.identity_element());
}

ConeElement random_boundary(const Realization& v, RationalSampler& sampler, std::size_t zero_block) {
  if (zero_block >= v.rank()) throw InvalidArgument("boundary block out of range");
  ConeElement d = v.identity_element();
  d.diag[zero_block] = 0;
  return rho_act(v, random_group_element(v, sampler), d);
}

}  // namespace conelab
