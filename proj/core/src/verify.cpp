#include "conelab/verify.hpp"

namespace conelab {

std::string to_string(Condition c) {
  switch (c) {
    case Condition::V1: return "V1";
    case Condition::V2: return "V2";
    case Condition::V3: return "V3";
  }
  return "?";
}

std::string Counterexample::describe() const {
  auto idx = [](std::size_t x) { return std::to_string(x + 1); };
  switch (condition) {
    case Condition::V1:
      return "V1: E" + idx(k) + idx(j) + "[" + idx(a) + "] * E" + idx(j) + idx(i) + "[" + idx(b) +
             "] is not in V" + idx(k) + idx(i);
    case Condition::V2:
      return "V2: E" + idx(k) + idx(i) + "[" + idx(a) + "] * tE" + idx(j) + idx(i) + "[" + idx(b) +
             "] is not in V" + idx(k) + idx(j);
    case Condition::V3:
      return "V3: polarized product of E" + idx(k) + idx(j) + "[" + idx(a) + "] and E" + idx(k) + idx(j) +
             "[" + idx(b) + "] is not scalar";
  }
  return {};
}

VerificationReport verify_v_conditions(const Realization& v) {
  VerificationReport report;
  const std::size_t r = v.rank();

  for (std::size_t i = 0; i < r && report.v1.passed; ++i) {
    for (std::size_t j = i + 1; j < r && report.v1.passed; ++j) {
      for (std::size_t k = j + 1; k < r && report.v1.passed; ++k) {
        const auto& left = v.basis(k, j);
        const auto& right = v.basis(j, i);
        for (std::size_t a = 0; a < left.size() && report.v1.passed; ++a) {
          for (std::size_t b = 0; b < right.size(); ++b) {
            ++report.v1.checked;
            if (!v.coordinates(k, i, left[a] * right[b])) {
              report.v1.passed = false;
              report.v1.first = Counterexample{Condition::V1, i, j, k, a, b};
              break;
            }
          }
        }
      }
    }
  }

  for (std::size_t i = 0; i < r && report.v2.passed; ++i) {
    for (std::size_t j = i + 1; j < r && report.v2.passed; ++j) {
      for (std::size_t k = j + 1; k < r && report.v2.passed; ++k) {
        const auto& left = v.basis(k, i);
        const auto& right = v.basis(j, i);
        for (std::size_t a = 0; a < left.size() && report.v2.passed; ++a) {
          for (std::size_t b = 0; b < right.size(); ++b) {
            ++report.v2.checked;
            if (!v.coordinates(k, j, multiply_transposed(left[a], right[b]))) {
              report.v2.passed = false;
              report.v2.first = Counterexample{Condition::V2, i, j, k, a, b};
              break;
            }
          }
        }
      }
    }
  }

  for (std::size_t k = 1; k < r && report.v3.passed; ++k) {
    for (std::size_t j = 0; j < k && report.v3.passed; ++j) {
      const auto& list = v.basis(k, j);
      for (std::size_t a = 0; a < list.size() && report.v3.passed; ++a) {
        for (std::size_t b = a; b < list.size(); ++b) {
          ++report.v3.checked;
          const Matrix product = multiply_transposed(list[a], list[b]);
          if (!(product + product.transpose()).scalar_value()) {
            report.v3.passed = false;
            report.v3.first = Counterexample{Condition::V3, 0, j, k, a, b};
            break;
          }
        }
      }
    }
  }
  return report;
}

}  // namespace conelab
