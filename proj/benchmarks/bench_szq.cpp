#include <benchmark/benchmark.h>

#include <numbers>

#include "szq/szq.hpp"

namespace {

using namespace szq;

const MeasureSpec kRogers(RogersSzego{0.5});

std::vector<UnitPoint> six_nodes() {
    std::vector<UnitPoint> out;
    for (long long num : {-3, -2, 0, 1, 2, 3}) out.push_back(UnitPoint::from_pi_fraction(num, 4));
    return out;
}

void BM_BlaschkeSolve(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const SchurSequence s = schur_from_moments(moments(kRogers, n), n - 1);
    const cplx target = std::polar(1.0, 0.3);
    for (auto _ : state) benchmark::DoNotOptimize(blaschke_solve(s, n, target));
}
BENCHMARK(BM_BlaschkeSolve)->RangeMultiplier(2)->Range(8, 128);

void BM_Prescribe2l(benchmark::State& state) {
    const SchurSequence s = schur_from_moments(moments(kRogers, 17), 13);
    const auto alphas = six_nodes();
    const cplx tau = std::polar(1.0, 0.9 * std::numbers::pi);
    for (auto _ : state) benchmark::DoNotOptimize(prescribe_2l(s, 16, 3, alphas, tau));
}
BENCHMARK(BM_Prescribe2l);

void BM_ContextSolve(benchmark::State& state) {
    const SchurSequence s = schur_from_moments(moments(kRogers, 17), 13);
    const PrescriptionContext ctx(s, 16, 3, six_nodes());
    const cplx tau = std::polar(1.0, 0.9 * std::numbers::pi);
    for (auto _ : state) benchmark::DoNotOptimize(ctx.solve(tau));
}
BENCHMARK(BM_ContextSolve);

void BM_BuildRule(benchmark::State& state) {
    const MomentSequence mu = moments(kRogers, 17);
    const SchurSequence s = schur_from_moments(mu, 13);
    const PrescriptionResult pr = prescribe_2l(s, 16, 3, six_nodes(), std::polar(1.0, 0.9 * std::numbers::pi));
    for (auto _ : state) benchmark::DoNotOptimize(build_rule(kRogers, mu, s, pr.spec));
}
BENCHMARK(BM_BuildRule);

void BM_ScanTau(benchmark::State& state) {
    const auto alphas = six_nodes();
    const int grid = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(scan_tau(kRogers, 16, 3, alphas, grid));
}
BENCHMARK(BM_ScanTau)->Arg(500)->Arg(4000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
