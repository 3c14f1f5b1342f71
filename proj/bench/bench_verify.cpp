// Benchmarks comparing the serial reference enumeration against the
// OpenMP-parallel kernels on the statement verifiers. Both modes run the
// same per-instance work and must produce identical reports; the
// comparison here is about wall-clock only.

#include <benchmark/benchmark.h>

#include "fqring/gf.hpp"
#include "fqring/ring.hpp"
#include "fqring/verify.hpp"

namespace {

using namespace fqring;

VerifyOptions options(ExecMode mode, std::uint32_t trials) {
    VerifyOptions opt;
    opt.mode = mode;
    opt.trials = trials;
    opt.seed = 0;
    return opt;
}

void bench_pairs_weak(benchmark::State& state, ExecMode mode) {
    // Exhaustive sweep over all ordered pairs of functions on the full
    // line over GF(4): 256^2 = 65536 instances.
    PointSet s = PointSet::full(FieldSpec::from_order(4), 1);
    VerifyOptions opt = options(mode, 100);
    for (auto _ : state) {
        VerificationReport report = verify_weak(s, opt);
        benchmark::DoNotOptimize(report.failure_count);
        if (!report.pass()) state.SkipWithError("verifier reported failures");
    }
}

void bench_pairs_prop33(benchmark::State& state, ExecMode mode) {
    // Product/sum ideal identities over all ordered pairs on the full
    // line over GF(3): 27^2 = 729 instances, each with ideal algebra.
    PointSet s = PointSet::full(FieldSpec::from_order(3), 1);
    VerifyOptions opt = options(mode, 100);
    for (auto _ : state) {
        VerificationReport report = verify_prop33(s, opt);
        benchmark::DoNotOptimize(report.failure_count);
        if (!report.pass()) state.SkipWithError("verifier reported failures");
    }
}

void bench_trials_nullstellensatz(benchmark::State& state, ExecMode mode) {
    // Randomized membership/certificate trials on the full plane over
    // GF(3); each trial builds certificates and runs the span oracle.
    PointSet s = PointSet::full(FieldSpec::from_order(3), 2);
    VerifyOptions opt = options(mode, 200);
    for (auto _ : state) {
        VerificationReport report = verify_nullstellensatz(s, opt);
        benchmark::DoNotOptimize(report.failure_count);
        if (!report.pass()) state.SkipWithError("verifier reported failures");
    }
}

void bench_grid(benchmark::State& state, ExecMode mode) {
    // The full default grid as exercised by `fqring verify all`.
    VerifyGrid grid;
    grid.fields = {FieldSpec::from_order(2), FieldSpec::from_order(3)};
    grid.nvars = {1, 2};
    VerifyOptions opt = options(mode, 50);
    for (auto _ : state) {
        std::vector<VerificationReport> reports = verify_all(grid, opt);
        benchmark::DoNotOptimize(reports.size());
        for (const VerificationReport& r : reports) {
            if (!r.pass()) state.SkipWithError("verifier reported failures");
        }
    }
}

} // namespace

BENCHMARK_CAPTURE(bench_pairs_weak, serial, fqring::ExecMode::Serial)
    ->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(bench_pairs_weak, parallel, fqring::ExecMode::Parallel)
    ->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(bench_pairs_prop33, serial, fqring::ExecMode::Serial)
    ->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(bench_pairs_prop33, parallel, fqring::ExecMode::Parallel)
    ->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(bench_trials_nullstellensatz, serial, fqring::ExecMode::Serial)
    ->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(bench_trials_nullstellensatz, parallel, fqring::ExecMode::Parallel)
    ->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(bench_grid, serial, fqring::ExecMode::Serial)
    ->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(bench_grid, parallel, fqring::ExecMode::Parallel)
    ->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
