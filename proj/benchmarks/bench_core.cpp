#include <benchmark/benchmark.h>

#include "hk/fixtures.hpp"
#include "hk/isotropy.hpp"
#include "hk/lrl.hpp"
#include "hk/sympow.hpp"

namespace {

void BM_FindIsotropic(benchmark::State& state) {
    hk::Lattice lat = hk::load_fixture("rank" + std::to_string(state.range(0)) + "-a");
    for (auto _ : state) {
        auto r = hk::find_isotropic(lat, 2);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_FindIsotropic)->Arg(5)->Arg(6)->Arg(7)->Arg(8);

void BM_Signature(benchmark::State& state) {
    hk::Lattice lat = hk::load_fixture("rank8-e");
    for (auto _ : state) {
        auto s = hk::signature(lat);
        benchmark::DoNotOptimize(s);
    }
}
BENCHMARK(BM_Signature);

void BM_SymPower(benchmark::State& state) {
    hk::Lattice lat = hk::load_fixture("rank5-a");
    auto delta = hk::find_isotropic(lat, 1);
    auto v = hk::find_transvection_companion(lat, *delta.vector, 1);
    hk::Isometry t1 = hk::eichler_transvection(lat, *delta.vector, *v.vector);
    const int n = int(state.range(0));
    for (auto _ : state) {
        auto s = hk::sym_power_operator(t1.matrix, n);
        benchmark::DoNotOptimize(s);
    }
}
BENCHMARK(BM_SymPower)->Arg(2)->Arg(3)->Arg(4);

void BM_JordanType(benchmark::State& state) {
    hk::Lattice lat = hk::load_fixture("rank5-a");
    auto delta = hk::find_isotropic(lat, 1);
    auto v = hk::find_transvection_companion(lat, *delta.vector, 1);
    hk::Isometry t1 = hk::eichler_transvection(lat, *delta.vector, *v.vector);
    const int n = int(state.range(0));
    hk::IntMat s = hk::sym_power_operator(t1.matrix, n);
    hk::RatMat big = hk::to_rat(s) - hk::RatMat::identity(s.rows());
    for (auto _ : state) {
        auto jt = hk::jordan_type(big, true);
        benchmark::DoNotOptimize(jt);
    }
}
BENCHMARK(BM_JordanType)->Arg(2)->Arg(3);

void BM_LrlCertificate(benchmark::State& state) {
    hk::Lattice lat = hk::load_fixture("rank5-a");
    const int n = int(state.range(0));
    for (auto _ : state) {
        auto out = hk::large_radius_certificate(lat, n, 2);
        benchmark::DoNotOptimize(out);
    }
}
BENCHMARK(BM_LrlCertificate)->Arg(1)->Arg(2);

}  // namespace

BENCHMARK_MAIN();
