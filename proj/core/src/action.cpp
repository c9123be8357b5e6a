#include "conelab/action.hpp"

#include "conelab/errors.hpp"

namespace conelab {
namespace {

std::string describe(const BlockViolation& violation) {
  return "block (" + std::to_string(violation.row_block + 1) + "," + std::to_string(violation.col_block + 1) +
         "): " + violation.reason;
}

}  // namespace

ConeElement rho_act(const Realization& v, const GroupElement& h, const ConeElement& x) {
  const Matrix hm = embed(v, h);
  const Matrix result = hm * multiply_transposed(embed(v, x), hm);
  auto projected = project(v, result);
  if (!projected) throw ConditionViolation("rho(h)x leaves V at " + describe(projected.violation));
  return std::move(*projected.element);
}

GroupElement group_multiply(const Realization& v, const GroupElement& h1, const GroupElement& h2) {
  auto projected = project_group(v, embed(v, h1) * embed(v, h2));
  if (!projected) throw ConditionViolation("product leaves H at " + describe(projected.violation));
  return std::move(*projected.element);
}

}  // namespace conelab
