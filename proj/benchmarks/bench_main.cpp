#include "cubigen/engine.hpp"
#include "cubigen/fieldkit.hpp"
#include "cubigen/pipeline.hpp"

#include <benchmark/benchmark.h>

using namespace cubigen;

namespace {

void BM_GroupLawAdd(benchmark::State& state) {
    MordellCurve curve{8100, CurveModel::four_x3};
    MordellPoint p = MordellPoint::affine(-9, 72);
    MordellPoint q = MordellPoint::affine(0, 90);
    for (auto _ : state) {
        benchmark::DoNotOptimize(add(curve, p, q));
    }
}
BENCHMARK(BM_GroupLawAdd);

void BM_ScalarMul(benchmark::State& state) {
    MordellCurve curve{8100, CurveModel::four_x3};
    MordellPoint p = MordellPoint::affine(-9, 72);
    BigInt t = state.range(0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(scalar_mul(curve, t, p));
    }
}
BENCHMARK(BM_ScalarMul)->Arg(3)->Arg(7);

void BM_FactorSigned(benchmark::State& state) {
    Rational q(BigInt("200560490130"), BigInt("96996896640"));
    for (auto _ : state) {
        benchmark::DoNotOptimize(factor_signed(q));
    }
}
BENCHMARK(BM_FactorSigned);

void BM_NaiveSearch(benchmark::State& state) {
    MordellCurve curve{8100, CurveModel::four_x3};
    for (auto _ : state) {
        benchmark::DoNotOptimize(naive_search(curve, state.range(0)));
    }
}
BENCHMARK(BM_NaiveSearch)->Arg(20)->Arg(50);

void BM_EnumerateQuasimonogenic(benchmark::State& state) {
    AnalysisContext ctx = AnalysisContext::for_n(90);
    GeneratorSet gens;
    gens.D = ctx.D;
    gens.includes_dual_kernel = true;
    gens.points = {MordellPoint::affine(0, 810), MordellPoint::affine(-54, 162),
                   MordellPoint::affine(-45, 540)};
    F3Matrix M = build_matrix(gens, ctx);
    for (auto _ : state) {
        benchmark::DoNotOptimize(enumerate_quasimonogenic(M, ctx, 2));
    }
}
BENCHMARK(BM_EnumerateQuasimonogenic);

void BM_EnumerateByPoints(benchmark::State& state) {
    AnalysisContext ctx = AnalysisContext::for_n(90);
    GeneratorSet gens;
    gens.D = ctx.D;
    gens.includes_dual_kernel = true;
    gens.points = {MordellPoint::affine(0, 810), MordellPoint::affine(-54, 162),
                   MordellPoint::affine(-45, 540)};
    for (auto _ : state) {
        benchmark::DoNotOptimize(enumerate_by_points(gens, ctx));
    }
}
BENCHMARK(BM_EnumerateByPoints);

void BM_CertifyMonogenic(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(certify_monogenic(90, 5));
    }
}
BENCHMARK(BM_CertifyMonogenic);

void BM_IntegralBasisTypeII(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(integral_basis(170));
    }
}
BENCHMARK(BM_IntegralBasisTypeII);

}  // namespace

BENCHMARK_MAIN();
