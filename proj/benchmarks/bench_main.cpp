#include <benchmark/benchmark.h>

#include "qbern/archimedean.hpp"
#include "qbern/bernoulli.hpp"
#include "qbern/convolution.hpp"
#include "qbern/volkenborn.hpp"

using namespace qbern;

namespace {

const PadicContext kCtx(3, 20);
const QParam kQ = QParam::padic(Rational(4), kCtx);

void BM_ModifiedBetaTable(benchmark::State& state) {
  for (auto _ : state) {
    BetaTable t(BetaKind::kModified, kQ);
    t.extend_to(static_cast<unsigned>(state.range(0)));
    benchmark::DoNotOptimize(t.symbolic(t.size() - 1));
  }
}
BENCHMARK(BM_ModifiedBetaTable)->Arg(10)->Arg(20)->Arg(40);

void BM_ClosedForm(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(modified_beta_closed(static_cast<unsigned>(state.range(0)), kQ));
}
BENCHMARK(BM_ClosedForm)->Arg(10)->Arg(20);

void BM_PadicLog(benchmark::State& state) {
  const PadicContext ctx(3, static_cast<int>(state.range(0)));
  const PadicNumber q = PadicNumber::from_integer(4, ctx);
  for (auto _ : state) benchmark::DoNotOptimize(padic_log(q));
}
BENCHMARK(BM_PadicLog)->Arg(20)->Arg(80);

void BM_RiemannGeometric(benchmark::State& state) {
  const CharacterSum f = monomial_characters(4, kQ);
  for (auto _ : state) benchmark::DoNotOptimize(riemann_sum(f, kQ, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_RiemannGeometric)->Arg(4)->Arg(8)->Arg(10);

void BM_RiemannEnumeration(benchmark::State& state) {
  const CharacterSum f = monomial_characters(4, kQ);
  for (auto _ : state) {
    benchmark::DoNotOptimize(riemann_sum(f, kQ, static_cast<int>(state.range(0)), SumMethod::kEnumeration));
  }
}
BENCHMARK(BM_RiemannEnumeration)->Arg(4)->Arg(6);

void BM_DirectPrefix(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        convolution_riemann_sum(2, 2, 0, kQ, static_cast<int>(state.range(0)), DirectMethod::kPrefix));
  }
}
BENCHMARK(BM_DirectPrefix)->Arg(4)->Arg(6)->Arg(8);

void BM_DirectConvolution(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        convolution_riemann_sum(2, 2, 0, kQ, static_cast<int>(state.range(0)), DirectMethod::kConvolution));
  }
}
BENCHMARK(BM_DirectConvolution)->Arg(4)->Arg(6);

void BM_ClosedFormAmn(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(evaluate_at_log(a_closed(3, 3, kQ), kQ.value(), kCtx));
  }
}
BENCHMARK(BM_ClosedFormAmn);

void BM_SeriesPartialSum(benchmark::State& state) {
  const RealEvalContext c = RealEvalContext::make(Rational(1, 2), static_cast<unsigned>(state.range(0)), Real("1e-12"));
  for (auto _ : state) benchmark::DoNotOptimize(series_partial_sum(8, c));
}
BENCHMARK(BM_SeriesPartialSum)->Arg(200)->Arg(400);

}  // namespace

BENCHMARK_MAIN();
