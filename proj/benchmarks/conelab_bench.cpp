#include <benchmark/benchmark.h>

#include "conelab/composition.hpp"
#include "conelab/degrees.hpp"
#include "conelab/doubling.hpp"
#include "conelab/ldl.hpp"
#include "conelab/rank3.hpp"
#include "conelab/sampler.hpp"
#include "conelab/verify.hpp"

namespace {

using namespace conelab;

void BM_IterateAndVerify(benchmark::State& state) {
  const auto rank = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    const Realization v = iterate_construction(rank);
    benchmark::DoNotOptimize(verify_v_conditions(v).passed());
  }
}
BENCHMARK(BM_IterateAndVerify)->DenseRange(3, 7)->Unit(benchmark::kMillisecond);

void BM_SigmaFromDims(benchmark::State& state) {
  const DimTable dims = DimTable::powers_of_two(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(sigma_from_dims(dims));
}
BENCHMARK(BM_SigmaFromDims)->Arg(4)->Arg(8)->Arg(12);

void BM_LdlInterior(benchmark::State& state) {
  const Realization v = iterate_construction(static_cast<std::size_t>(state.range(0)));
  RationalSampler sampler(1);
  const ConeElement x = random_interior(v, sampler);
  for (auto _ : state) benchmark::DoNotOptimize(ldl_decompose(v, x).is_member);
}
BENCHMARK(BM_LdlInterior)->DenseRange(2, 6)->Unit(benchmark::kMicrosecond);

void BM_Rank3ClosedDeterminant(benchmark::State& state) {
  const auto f = rank3::family_3_5_7();
  RationalSampler sampler(2);
  const rank3::Rank3Element x{sampler.next(), sampler.next(), sampler.next(), sampler.vector(3), sampler.vector(5),
                              sampler.vector(7)};
  for (auto _ : state) benchmark::DoNotOptimize(rank3::det_rank3_closed(f, x));
}
BENCHMARK(BM_Rank3ClosedDeterminant);

void BM_Rank3PivotDeterminant(benchmark::State& state) {
  const auto f = rank3::family_3_5_7();
  const Realization v = rank3::build_rank3_cone(f);
  RationalSampler sampler(2);
  const ConeElement x = random_interior(v, sampler);
  for (auto _ : state) benchmark::DoNotOptimize(determinant_from_pivots(v, ldl_decompose(v, x)));
}
BENCHMARK(BM_Rank3PivotDeterminant);

void BM_CompositionVerify(benchmark::State& state) {
  const auto f = rank3::composition_family(rank3::hurwitz_radon_number(state.range(0)), state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(rank3::verify_composition(f).passed);
}
BENCHMARK(BM_CompositionVerify)->Arg(8)->Arg(16)->Arg(32);

}  // namespace

BENCHMARK_MAIN();
