#include <benchmark/benchmark.h>

#include <random>

#include "orderflow/orderflow.hpp"

using namespace orderflow;

namespace {

FinPerm shuffled(const Window& w, std::uint64_t seed) {
    std::vector<Point> img(w.elements().begin(), w.elements().end());
    std::mt19937_64 rng(seed);
    std::shuffle(img.begin(), img.end(), rng);
    std::vector<FinPerm::Pair> pairs;
    for(std::size_t i = 0; i < w.size(); ++i) pairs.emplace_back(w[i], img[i]);
    return FinPerm::from_pairs(std::move(pairs));
}

} // namespace

static void BM_ApplyPerm(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const int k = static_cast<int>(state.range(1));
    Window w = Window::range(0, n);
    KConfig c = apply_code(sign_code(k), random_linear_order(w, 1));
    FinPerm a = shuffled(w, 2);
    for(auto _ : state) benchmark::DoNotOptimize(apply_perm(a, c));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(c.tuple_count()));
}
BENCHMARK(BM_ApplyPerm)->Args({8, 2})->Args({8, 3})->Args({8, 4})->Args({32, 2});

static void BM_CircularRealizable(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    KConfig c = circular_code(random_linear_order(Window::range(0, n), 3));
    for(auto _ : state) benchmark::DoNotOptimize(is_circular_realizable(c));
}
BENCHMARK(BM_CircularRealizable)->DenseRange(4, 8);

static void BM_MomentCurveOrientation(benchmark::State& state) {
    const auto k = static_cast<std::size_t>(state.range(0));
    std::vector<Rational> t;
    for(std::size_t i = 0; i < k; ++i) t.emplace_back(static_cast<long long>(3 * i + 1), static_cast<long long>(i + 2));
    for(auto _ : state) benchmark::DoNotOptimize(moment_curve_orientation(t));
}
BENCHMARK(BM_MomentCurveOrientation)->DenseRange(2, 6);

static void BM_RamseyMonoSubset(benchmark::State& state) {
    const auto m = static_cast<std::size_t>(state.range(0));
    const std::size_t n = ramsey_bound(m);
    std::mt19937_64 rng(4);
    auto coloring = PairColoring::generate(Window::range(0, n), [&](Point, Point) { return static_cast<int>(rng() & 1); });
    for(auto _ : state) benchmark::DoNotOptimize(ramsey_mono_subset(coloring, m));
}
BENCHMARK(BM_RamseyMonoSubset)->DenseRange(2, 5);

static void BM_ProximalityWitness(benchmark::State& state) {
    Window ground = Window::range(0, 256);
    LinearOrder o1 = random_linear_order(ground, 5), o2 = random_linear_order(ground, 6);
    for(auto _ : state) benchmark::DoNotOptimize(proximality_witness(o1, o2, Window::range(0, 4)));
}
BENCHMARK(BM_ProximalityWitness);

static void BM_OrbitFrequencies(benchmark::State& state) {
    LinearOrder source = random_linear_order(Window::range(0, 50), 7);
    SamplingOptions opts;
    opts.workers = static_cast<unsigned>(state.range(0));
    for(auto _ : state) benchmark::DoNotOptimize(orbit_frequencies(source, Window::range(0, 3), 20000, 1, opts));
    state.SetItemsProcessed(state.iterations() * 20000);
}
BENCHMARK(BM_OrbitFrequencies)->Arg(1)->Arg(4)->UseRealTime();

BENCHMARK_MAIN();
