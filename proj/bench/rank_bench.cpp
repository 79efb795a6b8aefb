// Serial vs OpenMP rank on cubic evaluation matrices of singular loci.

#include <benchmark/benchmark.h>

#include "dqv/classify.hpp"
#include "dqv/fields.hpp"

using namespace dqv;

namespace {

AlgMatrix matrix_for(const SurfaceParams& p) {
  auto br = evaluate_with_splitting<SingularLocus>([&](SplitContext& ctx) { return singular_locus(p, ctx); });
  return cubic_evaluation_matrix(br.front().value.points());
}

const AlgMatrix& thirty() {
  static AlgMatrix m = matrix_for({Alg(Rational(-1, 6)), Alg(Rational(-1, 48))});
  return m;
}

const AlgMatrix& forty() {
  static AlgMatrix m = [] {
    for (const auto& r : table1_rows())
      if (r.count == 40 && r.params) return matrix_for(*r.params);
    return AlgMatrix{};
  }();
  return m;
}

void BM_serial_30(benchmark::State& s) {
  for (auto _ : s) benchmark::DoNotOptimize(rank_serial(thirty()));
}
void BM_parallel_30(benchmark::State& s) {
  for (auto _ : s) benchmark::DoNotOptimize(rank_parallel(thirty(), static_cast<int>(s.range(0))));
}
void BM_certificate_30(benchmark::State& s) {
  for (auto _ : s) benchmark::DoNotOptimize(rank_certificate(thirty()).rank);
}
void BM_serial_40(benchmark::State& s) {
  for (auto _ : s) benchmark::DoNotOptimize(rank_serial(forty()));
}
void BM_parallel_40(benchmark::State& s) {
  for (auto _ : s) benchmark::DoNotOptimize(rank_parallel(forty(), static_cast<int>(s.range(0))));
}

}  // namespace

BENCHMARK(BM_serial_30)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_parallel_30)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_certificate_30)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_serial_40)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_parallel_40)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
