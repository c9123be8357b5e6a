// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "conelab/composition.hpp"
#include "conelab/degrees.hpp"
#include "conelab/doubling.hpp"
#include "conelab/invariants.hpp"
#include "conelab/json_io.hpp"
#include "conelab/ldl.hpp"
#include "conelab/rank3.hpp"
#include "conelab/sampler.hpp"
#include "conelab/verify.hpp"
#include "support/oracles.hpp"

namespace {

using namespace conelab;
using namespace conelab::rank3;
using conelab::testing::bareiss_determinant;

struct Outcome {
  bool passed = true;
  std::ostringstream note;

  void require(bool condition, const std::string& what) {
    if (!condition && passed) {
      passed = false;
      note << "first failure: " << what << "; ";
    }
  }
};

using Criterion = std::function<void(Outcome&)>;

void theorem_reproduction(Outcome& o) {
  for (std::size_t r = 2; r <= 7; ++r) {
    const std::string tag = "r=" + std::to_string(r);
    const Realization v = iterate_construction(r);
    o.require(verify_v_conditions(v).passed(), tag + " verify");
    o.require(DimTable::of(v) == DimTable::powers_of_two(r), tag + " dims");
    o.require(v.total_size() == (std::size_t{1} << r) - 1, tag + " N");
    const auto degrees = degrees_from_sigma(sigma_from_dims(DimTable::of(v)));
    o.require(degrees.back() == (std::int64_t{1} << (r - 1)), tag + " last degree");
  }
  o.note << "r=2..7";
}

void sigma_closed_form(Outcome& o) {
  for (std::size_t r = 2; r <= 12; ++r) {
    const SigmaMatrix s = sigma_from_dims(DimTable::powers_of_two(r));
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < r; ++j) {
        const std::int64_t expected = i == j ? 1 : i > j ? std::int64_t{1} << (i - j - 1) : 0;
        o.require(s.entries[i][j] == expected,
                  "r=" + std::to_string(r) + " sigma(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
      }
    }
  }
  o.note << "r=2..12";
}

void classification_table(Outcome& o) {
  using T = std::array<std::int64_t, 3>;
  struct Row {
    T triple, primal, dual;
    int case_number;
  };
  const Row rows[] = {
      {{2, 2, 2}, {1, 2, 3}, {3, 2, 1}, 1},
      {{1, 2, 2}, {1, 2, 4}, {3, 2, 1}, 2},
      {{3, 5, 7}, {1, 2, 4}, {4, 2, 1}, 3},
      {{0, 4, 9}, {1, 2, 2}, {3, 1, 1}, 4},
  };
  for (const auto& row : rows) {
    const auto [r, s, n] = row.triple;
    const std::string tag = "(" + std::to_string(r) + "," + std::to_string(s) + "," + std::to_string(n) + ")";
    const auto c = classify_degrees(r, s, n);
    o.require(c.case_number == row.case_number, tag + " case");
    o.require(c.primal == row.primal, tag + " primal");
    o.require(c.dual == row.dual, tag + " dual");
    const auto sigma_degrees = degrees_from_sigma(sigma_from_dims(DimTable::rank3(r, s, n)));
    o.require(sigma_degrees == std::vector<std::int64_t>(row.primal.begin(), row.primal.end()), tag + " sigma");
    o.require(dual_degrees_rank3(r, s, n) == std::vector<std::int64_t>(row.dual.begin(), row.dual.end()),
              tag + " dual sigma");
  }
  o.note << "4 triples";
}

void determinants(Outcome& o) {
  constexpr int kPoints = 100;
  RationalSampler sampler(4);
  const std::vector<CompositionFamily> families{composition_family(1, 1), composition_family(2, 2),
                                                composition_family(4, 4), composition_family(8, 8),
                                                composition_family(1, 2), family_3_5_7()};
  std::size_t checked = 0;
  for (const auto& f : families) {
    const std::string tag = "(" + std::to_string(f.r()) + "," + std::to_string(f.s()) + "," + std::to_string(f.n()) + ")";
    const Realization v = build_rank3_cone(f);
    const Realization d = build_rank3_dual(f);
    for (int i = 0; i < kPoints; ++i) {
      const Rank3Element x{sampler.next(), sampler.next(), sampler.next(), sampler.vector(f.r()),
                           sampler.vector(f.s()), sampler.vector(f.n())};
      o.require(det_rank3_closed(f, x) == bareiss_determinant(embed(v, to_cone_element(f, x))), tag + " primal");
      const DualRank3Element xi{sampler.next(), sampler.next(), sampler.next(), sampler.vector(f.r()),
                                sampler.vector(f.s()), sampler.vector(f.n())};
      o.require(det_rank3_dual_closed(f, xi) == bareiss_determinant(embed_dual_upper(f, xi)), tag + " dual upper");
      o.require(det_rank3_dual_closed(f, xi) == bareiss_determinant(embed(d, to_cone_element(f, xi))),
                tag + " dual lower");
      checked += 2;
    }
  }
  o.note << checked << " points over 6 triples";
}

void duality(Outcome& o) {
  RationalSampler sampler(5);
  const auto report = duality_check(family_3_5_7(), sampler, 100);
  o.require(report.pairs >= 100, "sample count");
  o.require(report.decomposition_failures == 0, "decomposition identity");
  o.require(report.positivity_failures == 0, "coupling positivity");
  o.note << report.pairs << " interior pairs, " << report.boundary_samples << " boundary samples";
}

void relative_invariance(Outcome& o) {
  RationalSampler sampler(6);
  const std::vector<CompositionFamily> families{composition_family(1, 2), CompositionFamily(0, 2, 3, {})};
  std::size_t pairs = 0;
  for (const auto& f : families) {
    for (Side side : {Side::primal, Side::dual}) {
      const std::string tag = std::string(f.r() ? "case 2" : "case 4") + (side == Side::primal ? " primal" : " dual");
      const SigmaMatrix sigma = sigma_from_dims(DimTable::of(realization_for(f, side)));
      for (std::size_t j = 0; j < 3; ++j) {
        auto expected = sigma.entries[j];
        for (auto& e : expected) e *= 2;
        o.require(character_exponents(sigma, j) == expected, tag + " exponents");
      }
      const auto report = relative_invariance_check(f, closed_form_invariants(f, side), sigma, sampler, 50);
      o.require(report.passed, tag);
      pairs += 50;
    }
  }
  o.note << pairs << " (h, x) pairs";
}

Matrix displayed_right(const std::vector<Rational>& y) {
  return Matrix::from_rows({{y[0], y[3], -y[2]},
                            {y[1], -y[2], -y[3]},
                            {y[2], y[1], y[0]},
                            {y[3], -y[0], y[1]},
                            {y[4], 0, 0},
                            {0, y[4], 0},
                            {0, 0, y[4]}});
}

void hurwitz_radon(Outcome& o) {
  for (std::int64_t n : {1, 2, 4, 8, 16}) {
    const std::int64_t r = hurwitz_radon_number(n);
    const auto f = composition_family(r, n);
    const std::string tag = "n=" + std::to_string(n);
    o.require(verify_composition(f).passed, tag);
    const auto& a = f.matrices();
    for (std::size_t i = 0; i < a.size(); ++i) {
      for (std::size_t j = i; j < a.size(); ++j) {
        const Matrix sum = a[i].transpose() * a[j] + a[j].transpose() * a[i];
        o.require(sum == (i == j ? Matrix::scalar(n, 2) : Matrix(n, n)), tag + " pair");
      }
    }
  }
  const auto fixture = io::family_from_json(io::read_json_file(conelab::testing::fixture_path("family_3_5_7.json")));
  o.require(verify_composition(fixture).passed, "fixture composition");
  o.require(consistency_lr(fixture).passed, "fixture consistency");
  for (std::size_t j = 0; j < 5; ++j) {
    std::vector<Rational> e(5);
    e[j] = 1;
    o.require(fixture.right(e) == displayed_right(e), "R(y) coefficient of y" + std::to_string(j + 1));
  }
  o.note << "n in {1,2,4,8,16}, fixture (3,5,7)";
}

void membership(Outcome& o) {
  RationalSampler sampler(8);
  const std::vector<Realization> cones{conelab::testing::omega2(), conelab::testing::omega3(),
                                       build_rank3_cone(family_3_5_7())};
  std::size_t points = 0, members = 0;
  for (const auto& v : cones) {
    for (int i = 0; i < 180; ++i) {
      ConeElement x;
      switch (i % 3) {
        case 0: x = random_element(v, sampler); break;
        case 1: x = random_interior(v, sampler); break;
        default: {
          // boundary point shifted along the last diagonal block
          x = random_boundary(v, sampler, static_cast<std::size_t>(i) % v.rank());
          x.diag[v.rank() - 1] += sampler.next();
        }
      }
      const bool member = ldl_decompose(v, x).is_member;
      o.require(member == conelab::testing::positive_definite(embed(v, x)), "point " + std::to_string(points));
      ++points;
      members += member;
    }
  }
  o.note << points << " points, " << members << " members";
}

}  // namespace

int main() {
  const std::pair<const char*, Criterion> criteria[] = {
      {"AC1 theorem reproduction", theorem_reproduction},
      {"AC2 sigma closed form", sigma_closed_form},
      {"AC3 classification table", classification_table},
      {"AC4 rank-3 determinants", determinants},
      {"AC5 duality coupling", duality},
      {"AC6 relative invariance", relative_invariance},
      {"AC7 Hurwitz-Radon families", hurwitz_radon},
      {"AC8 membership oracle", membership},
  };
  int failures = 0;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      run(o);
    } catch (const std::exception& e) {
      o.passed = false;
      o.note << "exception: " << e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s %s: %s (%.2f s)\n", o.passed ? "PASS" : "FAIL", name, o.note.str().c_str(), seconds);
    failures += !o.passed;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(std::size(criteria)) - failures, std::size(criteria));
  return failures == 0 ? 0 : 1;
}
