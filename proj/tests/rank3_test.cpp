#include <gtest/gtest.h>

#include "conelab/composition.hpp"
#include "conelab/degrees.hpp"
#include "conelab/errors.hpp"
#include "conelab/inner_product.hpp"
#include "conelab/json_io.hpp"
#include "conelab/rank3.hpp"
#include "conelab/sampler.hpp"
#include "conelab/verify.hpp"
#include "support/oracles.hpp"

namespace conelab::rank3 {
namespace {

using conelab::testing::bareiss_determinant;

Rank3Element random_point(const CompositionFamily& f, RationalSampler& sampler) {
  return {sampler.next(), sampler.next(), sampler.next(), sampler.vector(f.r()), sampler.vector(f.s()),
          sampler.vector(f.n())};
}

DualRank3Element random_dual_point(const CompositionFamily& f, RationalSampler& sampler) {
  return {sampler.next(), sampler.next(), sampler.next(), sampler.vector(f.r()), sampler.vector(f.s()),
          sampler.vector(f.n())};
}

// Row i of the lower layout is row perm(i) of the upper layout.
Matrix reverse_blocks(const Matrix& upper, std::size_t s, std::size_t n) {
  auto perm = [&](std::size_t i) { return i < n ? 1 + s + i : i < n + s ? 1 + (i - n) : 0; };
  Matrix lower(upper.rows(), upper.cols());
  for (std::size_t i = 0; i < upper.rows(); ++i) {
    for (std::size_t j = 0; j < upper.cols(); ++j) lower.set(i, j, upper.at(perm(i), perm(j)));
  }
  return lower;
}

CompositionFamily family_0(std::int64_t s, std::int64_t n) { return CompositionFamily(0, s, n, {}); }

TEST(HurwitzRadon, Numbers) {
  EXPECT_EQ(hurwitz_radon_number(1), 1);
  EXPECT_EQ(hurwitz_radon_number(2), 2);
  EXPECT_EQ(hurwitz_radon_number(3), 1);
  EXPECT_EQ(hurwitz_radon_number(4), 4);
  EXPECT_EQ(hurwitz_radon_number(8), 8);
  EXPECT_EQ(hurwitz_radon_number(16), 9);
  EXPECT_EQ(hurwitz_radon_number(24), 8);
  EXPECT_EQ(hurwitz_radon_number(32), 10);
  EXPECT_EQ(hurwitz_radon_number(256), 16 + 1);
  EXPECT_THROW(hurwitz_radon_number(0), InvalidArgument);
}

TEST(CompositionFamily, TrivialAndComplex) {
  const auto f1 = composition_family(1, 1);
  ASSERT_EQ(f1.matrices().size(), 1u);
  EXPECT_EQ(f1.matrices()[0], Matrix::identity(1));

  const auto f2 = composition_family(2, 2);
  EXPECT_EQ(f2.matrices()[0], Matrix::identity(2));
  EXPECT_EQ(f2.matrices()[1], Matrix::from_rows({{0, -1}, {1, 0}}));
  EXPECT_TRUE(verify_composition(f2).passed);
}

TEST(CompositionFamily, OctonionPairsByDirectEvaluation) {
  const auto f = composition_family(8, 8);
  const auto& a = f.matrices();
  int pairs = 0;
  for (std::size_t i = 0; i < 8; ++i) {
    for (std::size_t j = i + 1; j < 8; ++j, ++pairs) {
      EXPECT_TRUE((a[i].transpose() * a[j] + a[j].transpose() * a[i]).is_zero()) << i << "," << j;
    }
    EXPECT_EQ(a[i].transpose() * a[i], Matrix::identity(8));
  }
  EXPECT_EQ(pairs, 28);
}

TEST(CompositionFamily, MaximalFamiliesVerify) {
  for (std::int64_t n : {1, 2, 3, 4, 6, 8, 12, 16, 32}) {
    const std::int64_t r = hurwitz_radon_number(n);
    const auto f = composition_family(r, n);
    EXPECT_TRUE(verify_composition(f).passed) << "n = " << n;
    for (const auto& m : f.matrices()) {
      for (const auto& row : m.dense()) {
        for (const auto& e : row) EXPECT_TRUE(e == 0 || e == 1 || e == -1);
      }
    }
    for (std::size_t i = 1; i < f.matrices().size(); ++i) {
      EXPECT_EQ(f.matrices()[i].transpose(), Rational(-1) * f.matrices()[i]);
    }
  }
}

TEST(CompositionFamily, RejectsAboveBound) {
  EXPECT_THROW(composition_family(3, 2), InvalidArgument);
  EXPECT_THROW(composition_family(10, 16), InvalidArgument);
  EXPECT_THROW(composition_family(0, 4), InvalidArgument);
}

TEST(CompositionFamily, ShapeChecks) {
  EXPECT_THROW(CompositionFamily(1, 2, 1, {Matrix(1, 2)}), StructuralError);
  EXPECT_THROW(CompositionFamily(2, 2, 2, {Matrix::identity(2)}), StructuralError);
  EXPECT_THROW(CompositionFamily(1, 2, 2, {Matrix::identity(3)}), StructuralError);
}

TEST(CompositionFamily, SingleOrthogonalMatrixPasses) {
  const CompositionFamily f(1, 2, 3, {Matrix::from_rows({{0, 1}, {0, 0}, {-1, 0}})});
  EXPECT_TRUE(verify_composition(f).passed);
}

TEST(CompositionFamily, Family357) {
  const auto f = family_3_5_7();
  EXPECT_TRUE(verify_composition(f).passed);
  EXPECT_TRUE(consistency_lr(f).passed);
  const auto fixture = io::family_from_json(io::read_json_file(conelab::testing::fixture_path("family_3_5_7.json")));
  EXPECT_EQ(fixture, f);
}

TEST(CompositionFamily, FlippedSignFails) {
  const auto f = family_3_5_7();
  auto mats = f.matrices();
  mats[1].set(0, 3, -mats[1].at(0, 3));
  const auto report = verify_composition(CompositionFamily(3, 5, 7, mats));
  EXPECT_FALSE(report.passed);
  ASSERT_TRUE(report.failing_pair);
  const auto pair = *report.failing_pair;
  EXPECT_TRUE(pair == std::make_pair(std::size_t{1}, std::size_t{2}) || pair == std::make_pair(std::size_t{2}, std::size_t{2}) ||
              pair == std::make_pair(std::size_t{2}, std::size_t{3}));
}

TEST(CompositionFamily, RightMatrixMatchesDisplay) {
  const auto f = family_3_5_7();
  const std::vector<Rational> y{1, 2, 3, 4, 5};
  EXPECT_EQ(f.right(y), Matrix::from_rows({{1, 4, -3}, {2, -3, -4}, {3, 2, 1}, {4, -1, 2}, {5, 0, 0}, {0, 5, 0},
                                           {0, 0, 5}}));
  const std::vector<Rational> x{1, 2, 3};
  EXPECT_EQ(f.left(x), Matrix::from_rows({{1, 0, -3, 2, 0}, {0, 1, -2, -3, 0}, {3, 2, 1, 0, 0}, {-2, 3, 0, 1, 0},
                                          {0, 0, 0, 0, 1}, {0, 0, 0, 0, 2}, {0, 0, 0, 0, 3}}));
}

TEST(CompositionFamily, ComplexRightMatrix) {
  const auto f = composition_family(2, 2);
  const std::vector<Rational> y{3, 7};
  EXPECT_EQ(f.right(y), Matrix::from_rows({{3, -7}, {7, 3}}));
  EXPECT_TRUE(consistency_lr(f).passed);
  EXPECT_TRUE(consistency_lr(composition_family(1, 1)).passed);
}

TEST(CompositionFamily, BilinearIdentityAtRandomPoints) {
  RationalSampler sampler(41);
  const auto f = family_3_5_7();
  for (int i = 0; i < 20; ++i) {
    const auto x = sampler.vector(3);
    const auto y = sampler.vector(5);
    const auto z = conelab::apply(f.left(x), y);
    EXPECT_EQ(squared_norm(x) * squared_norm(y), squared_norm(z));
    EXPECT_EQ(z, conelab::apply(f.right(y), x));
  }
}

TEST(BuildCone, Family357Layout) {
  const auto f = family_3_5_7();
  const Realization v = build_rank3_cone(f);
  EXPECT_EQ(v.partition().sizes(), (std::vector<std::size_t>{7, 3, 1}));
  EXPECT_TRUE(verify_v_conditions(v).passed());
  EXPECT_EQ(DimTable::of(v), DimTable::rank3(3, 5, 7));

  const Rank3Element x{11, 22, 33, {1, 2, 3}, {4, 5, 6, 7, 8}, {9, 10, 12, 13, 14, 15, 16}};
  const Matrix m = embed(v, to_cone_element(f, x));
  // row x22 (first) is (y1, y2, y3, y4, y5, 0, 0 | x22, 0, 0 | x1)
  EXPECT_EQ(m.block(7, 0, 1, 11), Matrix::from_rows({{4, 5, 6, 7, 8, 0, 0, 22, 0, 0, 1}}));
  // row (y4, -y3, y2, -y1, 0, y5, 0 | 0, x22, 0 | x2)
  EXPECT_EQ(m.block(8, 0, 1, 11), Matrix::from_rows({{7, -6, 5, -4, 0, 8, 0, 0, 22, 0, 2}}));
  EXPECT_EQ(m.block(10, 0, 1, 11), Matrix::from_rows({{9, 10, 12, 13, 14, 15, 16, 1, 2, 3, 33}}));
  EXPECT_EQ(m.block(0, 0, 7, 7), Matrix::scalar(7, 11));
}

TEST(BuildCone, SmallTriples) {
  for (auto [r, n] : std::vector<std::pair<int, int>>{{1, 1}, {2, 2}, {4, 4}, {8, 8}, {1, 2}}) {
    const auto f = composition_family(r, n);
    const Realization v = build_rank3_cone(f);
    EXPECT_TRUE(verify_v_conditions(v).passed());
    EXPECT_EQ(DimTable::of(v), DimTable::rank3(r, n, n));
    const Realization d = build_rank3_dual(f);
    EXPECT_TRUE(verify_v_conditions(d).passed());
    EXPECT_EQ(DimTable::of(d), DimTable::rank3(n, r, n));
  }
  EXPECT_EQ(degrees_from_sigma(sigma_from_dims(DimTable::of(build_rank3_cone(composition_family(2, 2))))),
            (std::vector<std::int64_t>{1, 2, 3}));
  EXPECT_EQ(build_rank3_cone(composition_family(1, 1)).partition().sizes(), (std::vector<std::size_t>{1, 1, 1}));
}

TEST(BuildCone, CaseFourLayout) {
  const auto f = family_0(2, 3);
  const Realization v = build_rank3_cone(f);
  EXPECT_EQ(v.partition().sizes(), (std::vector<std::size_t>{5, 1, 1}));
  EXPECT_TRUE(verify_v_conditions(v).passed());
  EXPECT_EQ(DimTable::of(v), DimTable::rank3(0, 2, 3));
  const Realization d = build_rank3_dual(f);
  EXPECT_TRUE(verify_v_conditions(d).passed());
  EXPECT_EQ(DimTable::of(d), DimTable::rank3(2, 0, 3));
}

TEST(BuildCone, RejectsUnverifiedFamily) {
  auto mats = family_3_5_7().matrices();
  mats[0].set(0, 0, 2);
  const CompositionFamily bad(3, 5, 7, mats);
  EXPECT_THROW(build_rank3_cone(bad), PreconditionError);
  EXPECT_THROW(build_rank3_dual(bad), PreconditionError);
}

TEST(BuildDual, Family357Layout) {
  const auto f = family_3_5_7();
  const Realization d = build_rank3_dual(f);
  EXPECT_EQ(d.partition().sizes(), (std::vector<std::size_t>{7, 5, 1}));
  const DualRank3Element xi{11, 22, 33, {1, 2, 3}, {4, 5, 6, 7, 8}, {9, 10, 12, 13, 14, 15, 16}};
  const Matrix upper = embed_dual_upper(f, xi);
  // row eta_1 is (eta_1 | xi22, 0, 0, 0, 0 | xi1, 0, xi3, -xi2, 0, 0, 0)
  EXPECT_EQ(upper.block(1, 0, 1, 13), Matrix::from_rows({{4, 22, 0, 0, 0, 0, 1, 0, 3, -2, 0, 0, 0}}));
  EXPECT_EQ(upper.block(5, 0, 1, 13), Matrix::from_rows({{8, 0, 0, 0, 0, 22, 0, 0, 0, 0, 1, 2, 3}}));
  EXPECT_EQ(embed(d, to_cone_element(f, xi)), reverse_blocks(upper, 5, 7));
  EXPECT_EQ(dual_from_cone_element(f, to_cone_element(f, xi)), xi);
}

TEST(Determinant, IdentityAndDiagonal) {
  for (const auto& f : {family_3_5_7(), composition_family(4, 4), family_0(2, 3)}) {
    EXPECT_EQ(det_rank3_closed(f, identity_point(f)), 1);
    EXPECT_EQ(det_rank3_dual_closed(f, identity_dual_point(f)), 1);
    Rank3Element x = identity_point(f);
    x.x11 = 2;
    x.x22 = 3;
    x.x33 = 5;
    const long r = f.r() ? f.r() : 1;
    const long first = f.r() ? f.n() : f.s() + f.n();
    EXPECT_EQ(det_rank3_closed(f, x), power(Rational(2), first) * power(Rational(3), f.r() ? r : 1) * 5);
    DualRank3Element xi = identity_dual_point(f);
    xi.xi11 = 2;
    xi.xi22 = 3;
    xi.xi33 = 5;
    EXPECT_EQ(det_rank3_dual_closed(f, xi), 2 * power(Rational(3), f.s()) * power(Rational(5), f.n()));
  }
}

TEST(Determinant, MatchesEliminationOracle) {
  RationalSampler sampler(43);
  for (const auto& f : {composition_family(1, 1), composition_family(2, 2), composition_family(4, 4),
                        composition_family(1, 2), family_3_5_7(), family_0(2, 3)}) {
    const Realization v = build_rank3_cone(f);
    for (int i = 0; i < 15; ++i) {
      const auto x = random_point(f, sampler);
      EXPECT_EQ(det_rank3_closed(f, x), bareiss_determinant(embed(v, to_cone_element(f, x))));
      const auto xi = random_dual_point(f, sampler);
      EXPECT_EQ(det_rank3_dual_closed(f, xi), bareiss_determinant(embed_dual_upper(f, xi)));
    }
  }
}

TEST(Coupling, IdentitiesAndInnerProduct) {
  const auto f = family_3_5_7();
  EXPECT_EQ(coupling(identity_point(f), identity_dual_point(f)), 3);
  RationalSampler sampler(47);
  const Realization v = build_rank3_cone(f);
  for (int i = 0; i < 10; ++i) {
    const auto x = random_point(f, sampler);
    const auto xi = random_dual_point(f, sampler);
    EXPECT_EQ(coupling(x, xi), inner_product(v, to_cone_element(f, x), coupling_partner(f, xi)));
  }
}

TEST(Coupling, DecompositionExample) {
  const auto f = composition_family(1, 1);
  const Rank3Element x{2, 1, 1, {1}, {0}, {0}};
  const auto check = coupling_decomposition_check(f, x, identity_dual_point(f));
  EXPECT_TRUE(check.holds);
  EXPECT_EQ(check.lhs, 4);
  EXPECT_EQ(check.rhs, 4);
  const auto id = coupling_decomposition_check(f, identity_point(f), identity_dual_point(f));
  EXPECT_EQ(id.lhs, 3);
  EXPECT_EQ(id.rhs, 3);
}

TEST(Coupling, DecompositionPreconditions) {
  const auto f = composition_family(1, 1);
  const auto xi = identity_dual_point(f);
  EXPECT_THROW(coupling_decomposition_check(f, {0, 1, 1, {0}, {0}, {0}}, xi), PreconditionError);
  EXPECT_THROW(coupling_decomposition_check(f, {1, 1, 1, {0}, {1}, {0}}, xi), PreconditionError);
  EXPECT_THROW(coupling_decomposition_check(f, identity_point(f), {1, 1, 0, {0}, {0}, {0}}), PreconditionError);
  EXPECT_THROW(coupling_decomposition_check(f, identity_point(f), {1, 1, 1, {1}, {0}, {0}}), PreconditionError);
}

TEST(Coupling, DualityOnSmallFamilies) {
  RationalSampler sampler(53);
  for (const auto& f : {composition_family(2, 2), composition_family(1, 2), family_0(1, 2)}) {
    const auto report = duality_check(f, sampler, 15);
    EXPECT_TRUE(report.passed());
    EXPECT_EQ(report.pairs, 15u);
    EXPECT_GT(report.boundary_samples, 0u);
  }
}

TEST(Shapes, MismatchedVectorsRejected) {
  const auto f = family_3_5_7();
  Rank3Element x = identity_point(f);
  x.y.pop_back();
  EXPECT_THROW(det_rank3_closed(f, x), StructuralError);
  DualRank3Element xi = identity_dual_point(f);
  xi.zeta.push_back(0);
  EXPECT_THROW(det_rank3_dual_closed(f, xi), StructuralError);
}

}  // namespace
}  // namespace conelab::rank3
