#include <benchmark/benchmark.h>

#include "l2a/builders.hpp"
#include "l2a/classify.hpp"

using namespace l2a;

static void BM_VerifyQuaternion(benchmark::State& state) {
  const TwoTermAlgebra q = quaternion_example({1, 2, 3, 5});
  for (auto _ : state) benchmark::DoNotOptimize(verify(q).passed());
}
BENCHMARK(BM_VerifyQuaternion);

static void BM_VerifyMorphismAutomorphism(benchmark::State& state) {
  const Morphism m = example27_automorphism({1, 2, 3, 5});
  for (auto _ : state) benchmark::DoNotOptimize(verify_morphism(m).passed());
}
BENCHMARK(BM_VerifyMorphismAutomorphism);

static void BM_CohomologyDim(benchmark::State& state) {
  const LieAlgebra g = catalog::abelian(static_cast<std::size_t>(state.range(0)));
  const Representation rep = catalog::trivial(g, 2);
  for (auto _ : state) benchmark::DoNotOptimize(cohomology_dim(3, rep));
}
BENCHMARK(BM_CohomologyDim)->DenseRange(3, 6);

static void BM_NormalFormRandom(benchmark::State& state) {
  std::uint64_t seed = 0;
  for (auto _ : state) {
    const TwoTermAlgebra a = random_algebra(seed++ % 64);
    benchmark::DoNotOptimize(normal_form(a).algebra.n0);
  }
}
BENCHMARK(BM_NormalFormRandom);

static void BM_TransportRandom(benchmark::State& state) {
  const TwoTermAlgebra a = random_algebra(3);
  Rng rng(4);
  const Matrix phi0 = random_invertible(rng, a.n0);
  const Matrix phi1 = random_invertible(rng, a.n1);
  const Tensor Phi = random_antisymmetric(rng, a.n0, a.n1);
  for (auto _ : state) benchmark::DoNotOptimize(transport(a, phi0, phi1, Phi).algebra.n0);
}
BENCHMARK(BM_TransportRandom);

static void BM_Invariants(benchmark::State& state) {
  const TwoTermAlgebra s = skeletal_string(catalog::sl2(), 1);
  for (auto _ : state) benchmark::DoNotOptimize(invariants(s).killing_rank);
}
BENCHMARK(BM_Invariants);
BENCHMARK_MAIN();
