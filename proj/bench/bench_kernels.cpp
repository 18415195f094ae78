// bench_kernels.cpp - serial reference vs OpenMP production kernels, plus
// one end-to-end trajectory point. Run: ./bench_kernels [--benchmark_filter=..]
#include <benchmark/benchmark.h>

#include <cstdint>
#include <random>
#include <vector>

#include "onset/diagnostics.hpp"
#include "onset/dynamics.hpp"
#include "onset/kernels.hpp"
#include "onset/matrix.hpp"
#include "onset/ops.hpp"
#include "onset/states.hpp"

namespace {

using onset::kernels::cplx;

std::vector<cplx> random_block(std::size_t count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss;
    std::vector<cplx> out(count);
    for (auto& v : out) v = cplx(gauss(rng), gauss(rng));
    return out;
}

void bm_matmul_serial(benchmark::State& state) {
    const std::size_t n = state.range(0);
    const auto a = random_block(n * n, 1);
    const auto b = random_block(n * n, 2);
    std::vector<cplx> out(n * n);
    for (auto _ : state) {
        onset::kernels::serial::matmul(a.data(), b.data(), out.data(), n);
        benchmark::DoNotOptimize(out.data());
    }
}

void bm_matmul_parallel(benchmark::State& state) {
    const std::size_t n = state.range(0);
    const auto a = random_block(n * n, 1);
    const auto b = random_block(n * n, 2);
    std::vector<cplx> out(n * n);
    for (auto _ : state) {
        onset::kernels::matmul(a.data(), b.data(), out.data(), n);
        benchmark::DoNotOptimize(out.data());
    }
}

void bm_kron_serial(benchmark::State& state) {
    const std::size_t n = state.range(0);
    const auto a = random_block(n * n, 3);
    const auto b = random_block(n * n, 4);
    std::vector<cplx> out(n * n * n * n);
    for (auto _ : state) {
        onset::kernels::serial::kron(a.data(), n, b.data(), n, out.data());
        benchmark::DoNotOptimize(out.data());
    }
}

void bm_kron_parallel(benchmark::State& state) {
    const std::size_t n = state.range(0);
    const auto a = random_block(n * n, 3);
    const auto b = random_block(n * n, 4);
    std::vector<cplx> out(n * n * n * n);
    for (auto _ : state) {
        onset::kernels::kron(a.data(), n, b.data(), n, out.data());
        benchmark::DoNotOptimize(out.data());
    }
}

void bm_partial_trace_serial(benchmark::State& state) {
    const std::size_t n = state.range(0);
    const auto m = random_block(n * n * n * n, 5);
    std::vector<cplx> out(n * n);
    for (auto _ : state) {
        onset::kernels::serial::partial_trace_slow(m.data(), n, n, out.data());
        benchmark::DoNotOptimize(out.data());
    }
}

void bm_partial_trace_parallel(benchmark::State& state) {
    const std::size_t n = state.range(0);
    const auto m = random_block(n * n * n * n, 5);
    std::vector<cplx> out(n * n);
    for (auto _ : state) {
        onset::kernels::partial_trace_slow(m.data(), n, n, out.data());
        benchmark::DoNotOptimize(out.data());
    }
}

void bm_phase_conjugate_serial(benchmark::State& state) {
    const std::size_t n = state.range(0);
    const auto m = random_block(n * n, 6);
    std::vector<double> lam(n);
    for (std::size_t i = 0; i < n; ++i) lam[i] = 0.01 * i;
    std::vector<cplx> out(n * n);
    for (auto _ : state) {
        onset::kernels::serial::phase_conjugate(m.data(), lam.data(), 0.7,
                                                out.data(), n);
        benchmark::DoNotOptimize(out.data());
    }
}

void bm_phase_conjugate_parallel(benchmark::State& state) {
    const std::size_t n = state.range(0);
    const auto m = random_block(n * n, 6);
    std::vector<double> lam(n);
    for (std::size_t i = 0; i < n; ++i) lam[i] = 0.01 * i;
    std::vector<cplx> out(n * n);
    for (auto _ : state) {
        onset::kernels::phase_conjugate(m.data(), lam.data(), 0.7, out.data(),
                                        n);
        benchmark::DoNotOptimize(out.data());
    }
}

// One full trajectory sample of the light-matter setup: evolve the joint
// state, trace out the field, and take the qubit fragility.
void bm_trajectory_point(benchmark::State& state) {
    using namespace onset;
    const std::size_t dim = state.range(0);
    const FockSpace fs(dim, 1.0, 1.0);
    const ProductInteraction h(ops::pauli_x(), ops::quadrature(dim), 1.0);
    const JointEvolver ev(
        DensityMatrix::trusted(kron(qubit_atom(0.3, 0.5).mat(),
                                    vacuum(fs).mat())),
        h);
    const HermitianObservable sx(ops::pauli_x());
    double t = 0.1;
    for (auto _ : state) {
        const auto joint = ev.state_at(t);
        const auto rho_q = DensityMatrix::trusted(
            partial_trace(joint, 2, dim, Factor::fast));
        benchmark::DoNotOptimize(fragility_2(rho_q, sx));
        t += 1e-6;
    }
}

}  // namespace

BENCHMARK(bm_matmul_serial)->Arg(64)->Arg(128)->Arg(256);
BENCHMARK(bm_matmul_parallel)->Arg(64)->Arg(128)->Arg(256);
BENCHMARK(bm_kron_serial)->Arg(16)->Arg(32);
BENCHMARK(bm_kron_parallel)->Arg(16)->Arg(32);
BENCHMARK(bm_partial_trace_serial)->Arg(16)->Arg(32);
BENCHMARK(bm_partial_trace_parallel)->Arg(16)->Arg(32);
BENCHMARK(bm_phase_conjugate_serial)->Arg(128)->Arg(256);
BENCHMARK(bm_phase_conjugate_parallel)->Arg(128)->Arg(256);
BENCHMARK(bm_trajectory_point)->Arg(32)->Arg(64);

BENCHMARK_MAIN();
