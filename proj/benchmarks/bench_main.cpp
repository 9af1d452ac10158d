#include <benchmark/benchmark.h>

#include "qweyl/hopf.hpp"
#include "qweyl/properties.hpp"
#include "qweyl/reduction.hpp"

using namespace qweyl;

namespace {

const Field kQ = Field::rational_function();

void BM_Multiply(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  auto spec = AlgebraSpec::single_parameter(n, Normalization::Rescaled, kQ);
  Rng rng(1);
  auto u = random_element(spec, 4, 6, rng), v = random_element(spec, 4, 6, rng);
  for (auto _ : state) benchmark::DoNotOptimize(u * v);
}
BENCHMARK(BM_Multiply)->Arg(1)->Arg(2)->Arg(3);

void BM_NormalFormWord(benchmark::State& state) {
  auto spec = AlgebraSpec::single_parameter(2, Normalization::Rescaled, kQ);
  Word w;
  for (long k = 0; k < state.range(0); ++k) {
    w.push_back(WordFactor::d(static_cast<std::size_t>(k % 2)));
    w.push_back(WordFactor::x(static_cast<std::size_t>((k + 1) % 2)));
  }
  for (auto _ : state) benchmark::DoNotOptimize(normal_form(w, spec));
}
BENCHMARK(BM_NormalFormWord)->Arg(2)->Arg(4)->Arg(6);

void BM_CyclotomicMultiply(benchmark::State& state) {
  auto spec = AlgebraSpec::single_parameter(2, Normalization::Rescaled, Field::cyclotomic(static_cast<int>(state.range(0))));
  Rng rng(2);
  auto u = random_element(spec, 4, 6, rng), v = random_element(spec, 4, 6, rng);
  for (auto _ : state) benchmark::DoNotOptimize(u * v);
}
BENCHMARK(BM_CyclotomicMultiply)->Arg(3)->Arg(7)->Arg(15);

void BM_HeisenbergProduct(benchmark::State& state) {
  auto spec = AlgebraSpec::single_parameter(2, Normalization::Unscaled, kQ);
  const auto k = static_cast<unsigned>(state.range(0));
  auto one = Scalar::one(kQ);
  auto u = double_monomial({0, 0}, {k, k}, one), v = double_monomial({k, k}, {0, 0}, one);
  for (auto _ : state) {
    BraidedHopf h(spec);
    benchmark::DoNotOptimize(h.heisenberg_product(u, v));
  }
}
BENCHMARK(BM_HeisenbergProduct)->Arg(1)->Arg(2)->Arg(3);

void BM_Commutant(benchmark::State& state) {
  const int l = static_cast<int>(state.range(0));
  Field f = Field::cyclotomic(l);
  auto rep = build_irrep_rank1(Scalar::from_integer(f, 2), std::vector<Scalar>(static_cast<std::size_t>(l), Scalar::one(f)), l);
  for (auto _ : state) benchmark::DoNotOptimize(commutant_dimension(rep));
}
BENCHMARK(BM_Commutant)->Arg(3)->Arg(5)->Arg(7);

void BM_WeightSpace(benchmark::State& state) {
  Field f = Field::cyclotomic(3);
  auto one = Scalar::one(f);
  auto rep = build_irrep({RankOneData::diagonal(Scalar::from_integer(f, 2), {one, one, one}), RankOneData::nilpotent()}, 3);
  TorusData torus(IntMatrix{{1}, {1}});
  auto etas = compatible_etas({Scalar::from_integer(f, 2), one}, torus, 3);
  for (auto _ : state) benchmark::DoNotOptimize(weight_space(rep, torus, etas.front()));
}
BENCHMARK(BM_WeightSpace);

}  // namespace
BENCHMARK_MAIN();
