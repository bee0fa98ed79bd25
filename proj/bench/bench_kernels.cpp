#include <benchmark/benchmark.h>

#include <random>

#include "lorentz/cone/lattice.hpp"
#include "lorentz/cone/spacetime.hpp"
#include "lorentz/core/parallel.hpp"
#include "lorentz/model/model_space.hpp"

using namespace lorentz;
using namespace lorentz::cone;

namespace {

Exec exec_of(const benchmark::State& s) { return s.range(0) ? Exec::parallel : Exec::serial; }

const LatticeSpec kSpec{{0, 1.5, -0.75, 0.75}, 0.01, 4, 4};

void BM_build_edges(benchmark::State& s) {
    Minkowski2 field;
    auto nodes = lattice_nodes(field, kSpec);
    for (auto _ : s) benchmark::DoNotOptimize(build_edges(field, kSpec, nodes, exec_of(s)));
}

void BM_lattice_tau_many(benchmark::State& s) {
    static const CausalLattice lat = build_lattice(Minkowski2(), kSpec);
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> V(0, lat.node_count() - 1);
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < 64; ++i) pairs.emplace_back(V(rng), V(rng));
    for (auto _ : s) benchmark::DoNotOptimize(lattice_tau_many(lat, pairs, exec_of(s)));
}

void BM_tau_matrix(benchmark::State& s) {
    model::ModelSpace X(-1.0);
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> U(-0.4, 0.4);
    std::vector<model::ModelPoint> pts;
    for (int i = 0; i < 600; ++i) pts.push_back(model::chart_point(-1.0, U(rng), U(rng)));
    for (auto _ : s)
        benchmark::DoNotOptimize(tau_matrix<model::ModelPoint>(X, std::span<const model::ModelPoint>(pts), exec_of(s)));
}

}  // namespace

// Arg 0 = serial reference, 1 = OpenMP.
BENCHMARK(BM_build_edges)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_lattice_tau_many)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_tau_matrix)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
