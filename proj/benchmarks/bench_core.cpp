#include <benchmark/benchmark.h>

#include "ellu2/dynrep.hpp"
#include "ellu2/pairing.hpp"
#include "ellu2/rmatrix.hpp"
#include "ellu2/theta.hpp"

using namespace ellu2;

namespace {

const ModulusParams mp(0.2, 0.5);
const Complex lam(0.41, 0.07);
const Complex z = std::exp(Complex(0.0, 0.4));
const Complex w = 0.83 * std::exp(Complex(0.0, 1.1)) * z;

void BM_theta(benchmark::State& state) {
    Complex arg(0.3, 0.4);
    for (auto _ : state) benchmark::DoNotOptimize(theta(arg, mp));
}
BENCHMARK(BM_theta);

void BM_theta_reduced(benchmark::State& state) {
    // argument far outside the annulus, exercising the reduction walk
    Complex arg(55.0, 14.0);
    for (auto _ : state) benchmark::DoNotOptimize(theta(arg, mp));
}
BENCHMARK(BM_theta_reduced);

void BM_elliptic_R(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(elliptic_R(lam, w / z, mp));
}
BENCHMARK(BM_elliptic_R);

void BM_qdybe_residual(benchmark::State& state) {
    RFun R = [](Complex l, Complex s) { return elliptic_R(l, s, mp); };
    for (auto _ : state)
        benchmark::DoNotOptimize(qdybe_residual(R, lam, 1.2, 0.9, Complex(0.7, 0.2)));
}
BENCHMARK(BM_qdybe_residual);

void BM_pairing_closed(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    MatrixElementIndex se(n, n / 2, n / 2, w), te(n, n / 2, n / 2, z);
    DiffOp d = pair_matrix_matrix_closed(se, te, mp);
    for (auto _ : state) benchmark::DoNotOptimize(d.coeff(lam));
}
BENCHMARK(BM_pairing_closed)->Arg(1)->Arg(2)->Arg(3);

void BM_pairing_oracle(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    MatrixElementIndex se(n, n / 2, n / 2, w), te(n, n / 2, n / 2, z);
    DiffOp d = pair_matrix_matrix_oracle(se, te, mp);
    for (auto _ : state) benchmark::DoNotOptimize(d.coeff(lam));
}
BENCHMARK(BM_pairing_oracle)->Arg(1)->Arg(2)->Arg(3);

void BM_rep_extract(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    MatrixElementIndex se(n, n / 2, n / 2, w);
    for (auto _ : state)
        benchmark::DoNotOptimize(rep_pairing_extract(se, n, n / 2, n / 2, z, lam, mp));
}
BENCHMARK(BM_rep_extract)->Arg(1)->Arg(2)->Arg(3);

} // namespace

BENCHMARK_MAIN();
