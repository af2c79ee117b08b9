#include <benchmark/benchmark.h>

#include "sasyno/classifier.hpp"
#include "sasyno/dataset.hpp"
#include "sasyno/rng.hpp"
#include "sasyno/samplers.hpp"
#include "sasyno/sasyno.hpp"

namespace {

using namespace sasyno;

Dataset random_minority(std::size_t n, std::size_t dims, Rng& rng) {
    Dataset d(dims);
    for (std::size_t i = 0; i < n; ++i) {
        Sample s;
        s.label = "0";
        s.features.resize(dims);
        for (double& v : s.features) v = rng.uniform();
        d.add(std::move(s));
    }
    return d;
}

Dataset random_binary(std::size_t n0, std::size_t n1, std::size_t dims, Rng& rng) {
    Rng gen(rng.next_u64());
    std::vector<double> c0(dims, 0.0), c1(dims, 1.5);
    return generate_gaussian_imbalanced(n0, n1, c0, c1, 1.0, 1.0, gen);
}

void BM_DisturbanceProfile(benchmark::State& state) {
    Rng rng(7);
    const Dataset minority = random_minority(static_cast<std::size_t>(state.range(0)), 8, rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(disturbance_profile(minority));
    }
}
BENCHMARK(BM_DisturbanceProfile)->Range(16, 1024);

void BM_SasynoOversample(benchmark::State& state) {
    Rng rng(7);
    const Dataset minority = random_minority(static_cast<std::size_t>(state.range(0)), 8, rng);
    for (auto _ : state) {
        Rng stream(11);
        benchmark::DoNotOptimize(sasyno_oversample(minority, 1000, stream));
    }
}
BENCHMARK(BM_SasynoOversample)->Range(16, 512);

void BM_Smote(benchmark::State& state) {
    Rng rng(7);
    const Dataset minority = random_minority(static_cast<std::size_t>(state.range(0)), 8, rng);
    for (auto _ : state) {
        Rng stream(11);
        benchmark::DoNotOptimize(smote(minority, 1000, 5, stream));
    }
}
BENCHMARK(BM_Smote)->Range(16, 512);

void BM_KnnPredict(benchmark::State& state) {
    Rng rng(7);
    const Dataset train = random_binary(100, static_cast<std::size_t>(state.range(0)), 4, rng);
    const Dataset queries = random_binary(50, 50, 4, rng);
    const KnnModel model = knn_fit(train, 1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(knn_predict(model, queries));
    }
}
BENCHMARK(BM_KnnPredict)->Range(256, 4096);

}  // namespace

BENCHMARK_MAIN();
