#include <benchmark/benchmark.h>

#include <qpl/normal_form.hpp>

using namespace qpl;

namespace {

void BM_ConvolveShiftPowers(benchmark::State& state) {
    const AlgebraElement w = chi_w();
    const Int power = state.range(0);
    for (auto _ : state) {
        AlgebraElement acc = unit();
        for (Int t = 0; t < power; ++t) acc = convolve(acc, w);
        benchmark::DoNotOptimize(acc);
    }
}
BENCHMARK(BM_ConvolveShiftPowers)->Arg(4)->Arg(16);

void BM_ConvolveChiB(benchmark::State& state) {
    const AlgebraElement a = chi_b(state.range(0));
    const AlgebraElement b = subtract(unit(), chi_b(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(convolve(a, b));
        benchmark::DoNotOptimize(convolve(a, a));
    }
}
BENCHMARK(BM_ConvolveChiB)->Arg(4)->Arg(32);

void BM_ShiftUnitaryCheck(benchmark::State& state) {
    for (auto _ : state) {
        const ElementMatrix u =
            shift_pair_unitary(Geometry::ProjLine, state.range(0), false);
        benchmark::DoNotOptimize(is_unitary(u));
    }
}
BENCHMARK(BM_ShiftUnitaryCheck)->Arg(1)->Arg(8);

void BM_ReduceVerify(benchmark::State& state) {
    const BlockSpec spec{{{BlockKind::Cofinite, 2, 3},
                          {BlockKind::Finite, 4, 1},
                          {BlockKind::Cofinite, 1, 0}}};
    for (auto _ : state) {
        const auto [cls, cert] = reduce(spec, Geometry::ProjLine);
        benchmark::DoNotOptimize(certificate_ok(spec, cert, cls, Geometry::ProjLine));
    }
}
BENCHMARK(BM_ReduceVerify);

void BM_Classify(benchmark::State& state) {
    const BlockSpec spec{{{BlockKind::Cofinite, 2, 3},
                          {BlockKind::Finite, 4, 1},
                          {BlockKind::Cofinite, 1, 0}}};
    for (auto _ : state)
        benchmark::DoNotOptimize(classify(spec, Geometry::PodlesSphere));
}
BENCHMARK(BM_Classify);

void BM_Represent(benchmark::State& state) {
    const AlgebraElement f = convolve(chi_w(), involute(chi_w()));
    for (auto _ : state) benchmark::DoNotOptimize(represent(f, state.range(0)));
}
BENCHMARK(BM_Represent)->Arg(32)->Arg(128);

void BM_CompressionConsistency(benchmark::State& state) {
    const AlgebraElement f = chi_w();
    const AlgebraElement g = involute(chi_w());
    for (auto _ : state)
        benchmark::DoNotOptimize(compression_consistency(f, g, state.range(0), 4));
}
BENCHMARK(BM_CompressionConsistency)->Arg(32)->Arg(64);

}  // namespace

BENCHMARK_MAIN();
