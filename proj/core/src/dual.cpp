#include "conelab/dual.hpp"

#include "conelab/errors.hpp"
#include "conelab/inner_product.hpp"
#include "conelab/ldl.hpp"

namespace conelab {

PairingReport dual_pairing_positive(const Realization& v, const ConeElement& y,
                                    std::span<const ConeElement> samples) {
  PairingReport report;
  for (std::size_t s = 0; s < samples.size(); ++s) {
    if (!ldl_decompose(v, samples[s]).in_closure()) {
      throw PreconditionError("sample " + std::to_string(s) + " is not in the closed cone");
    }
    if (samples[s].is_zero()) {
      ++report.skipped_zero;
      continue;
    }
    ++report.checked;
    Rational value = inner_product(v, samples[s], y);
    if (value <= 0 && report.all_positive) {
      report.all_positive = false;
      report.first_failure = s;
      report.failure_value = value;
    }
  }
  return report;
}

}  // namespace conelab
