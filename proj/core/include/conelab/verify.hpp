#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "conelab/realization.hpp"

namespace conelab {

enum class Condition { V1, V2, V3 };

std::string to_string(Condition c);

/// First failing tuple of a condition. Block indices are 0-based.
///   V1: basis(k,j)[a] * basis(j,i)[b] is not in V_ki
///   V2: basis(k,i)[a] * t(basis(j,i)[b]) is not in V_kj
///   V3: basis(k,j)[a] t(basis(k,j)[b]) + (b,a) term is not scalar (i unused)
struct Counterexample {
  Condition condition = Condition::V1;
  std::size_t i = 0;
  std::size_t j = 0;
  std::size_t k = 0;
  std::size_t a = 0;
  std::size_t b = 0;

  std::string describe() const;
};

struct ConditionResult {
  bool passed = true;
  std::size_t checked = 0;
  std::optional<Counterexample> first;
};

struct VerificationReport {
  ConditionResult v1;
  ConditionResult v2;
  ConditionResult v3;

  bool passed() const { return v1.passed && v2.passed && v3.passed; }
};

/// Exact check of (V1), (V2) and the polarized form of (V3) over all basis
/// tuples. Span membership is decided by exact elimination.
VerificationReport verify_v_conditions(const Realization& v);

}  // namespace conelab
