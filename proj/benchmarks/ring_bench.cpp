#include <benchmark/benchmark.h>

#include "cleanring/cleanring.hpp"

using namespace cleanring;

namespace {

// Fresh rings each iteration so the frozen caches are not reused.
void BM_Classify(benchmark::State& state, const char* spec) {
  for (auto _ : state) {
    const auto ring = build_ring(spec);
    benchmark::DoNotOptimize(classify_ring(ring));
  }
}
BENCHMARK_CAPTURE(BM_Classify, m2_f2, "M(2,F2)")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Classify, m3_f2, "M(3,F2)")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Classify, ut3_z4, "UT(3,Z4)")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Classify, m2_b2, "M(2,B2)")->Unit(benchmark::kMillisecond);

void BM_ClassifyThreads(benchmark::State& state) {
  const auto star = adjoin_unity(make_nil_power_algebra(3));
  ClassifyOptions options;
  options.threads = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    const auto ring = make_matrix_ring(star, 2);
    benchmark::DoNotOptimize(classify_ring(ring, options));
  }
}
BENCHMARK(BM_ClassifyThreads)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_KotheMatrixRing(benchmark::State& state) {
  const auto star = adjoin_unity(make_strictly_upper_algebra(3));
  for (auto _ : state) {
    const auto ring = make_matrix_ring(star, 2);
    benchmark::DoNotOptimize(classify_ring(ring));
  }
}
BENCHMARK(BM_KotheMatrixRing)->Unit(benchmark::kMillisecond)->Iterations(1);

void BM_Idempotents(benchmark::State& state) {
  for (auto _ : state) {
    const auto ring = build_ring("M(3,F2)");
    benchmark::DoNotOptimize(idempotents(ring).size());
  }
}
BENCHMARK(BM_Idempotents);

void BM_Radical(benchmark::State& state) {
  for (auto _ : state) {
    const auto ring = build_ring("UT(3,Z4)");
    benchmark::DoNotOptimize(jacobson_radical(ring).size());
  }
}
BENCHMARK(BM_Radical)->Unit(benchmark::kMillisecond);

void BM_PackedMul(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const std::uint64_t mask = n * n == 64 ? ~0ULL : (1ULL << (n * n)) - 1;
  std::uint64_t a = 0x9e3779b97f4a7c15ULL & mask, b = 0xc2b2ae3d27d4eb4fULL & mask;
  for (auto _ : state) {
    a = gf2::mul_packed(a, b, n) ^ b;
    benchmark::DoNotOptimize(a);
  }
}
BENCHMARK(BM_PackedMul)->Arg(3)->Arg(4)->Arg(8);

void BM_GL4Search(benchmark::State& state) {
  using gf2::BitMatrix;
  const auto e = gf2::block_diagonal(BitMatrix::identity(3), BitMatrix::zero(1));
  const auto f = gf2::block_diagonal(BitMatrix{{1, 1, 1}, {1, 1, 1}, {1, 1, 1}}, BitMatrix::zero(1));
  for (auto _ : state) {
    const auto group = gf2::general_linear_group(4);
    benchmark::DoNotOptimize(gf2::find_conjugator(e, f, group));
  }
}
BENCHMARK(BM_GL4Search)->Unit(benchmark::kMillisecond);

void BM_Parse(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(parse_ring_spec("T((F2 x F2) x Z3,id,3) x M(2,UT(2,Z4))"));
  }
}
BENCHMARK(BM_Parse);

}  // namespace

BENCHMARK_MAIN();
