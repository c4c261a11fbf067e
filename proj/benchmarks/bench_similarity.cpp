#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "tstates/tstates.hpp"

using namespace tstates;

namespace {

ConnectionSeries random_series(std::mt19937_64& rng, std::size_t length) {
  std::vector<int> bits(length);
  for (auto& b : bits) b = static_cast<int>(rng() & 1u);
  return ConnectionSeries::from_bits(bits);
}

PlantedNetwork planted(std::size_t nodes, std::size_t windows, std::size_t w) {
  SyntheticSpec s;
  s.num_nodes = nodes;
  s.num_windows = windows;
  s.window_length = w;
  s.noise = 0.01;
  s.state_sequence = block_sequence(windows, 2, 2);
  for (std::size_t k = 0; k < 2; ++k) {
    StateModel m;
    m.model = ActivityModel::periodic;
    m.pair_density = 0.05;
    m.pair_set = k;
    m.period = 4 + 2 * k;
    m.on_length = 2;
    s.states.push_back(m);
  }
  return generate_planted_states(s);
}

}  // namespace

static void BM_RotationMatch(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const auto len = static_cast<std::size_t>(state.range(0));
  const auto a = random_series(rng, len);
  const auto b = random_series(rng, len - len / 10);
  for (auto _ : state) benchmark::DoNotOptimize(best_rotation_match(a.view(), b.view()));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_RotationMatch)->RangeMultiplier(2)->Range(16, 1024)->Complexity();

static void BM_TensorSimilarity(benchmark::State& state) {
  const auto p = planted(static_cast<std::size_t>(state.range(0)), 2, 60);
  const auto plan = slice_windows(p.network, 60);
  const auto tensors = build_tensors(p.network, plan);
  for (auto _ : state) benchmark::DoNotOptimize(tensor_similarity(tensors[0], tensors[1]));
}
BENCHMARK(BM_TensorSimilarity)->Arg(50)->Arg(100)->Arg(200);

static void BM_SimilarityMatrix(benchmark::State& state) {
  const auto p = planted(100, static_cast<std::size_t>(state.range(0)), 60);
  const auto plan = slice_windows(p.network, 60);
  const auto tensors = build_tensors(p.network, plan);
  for (auto _ : state) benchmark::DoNotOptimize(similarity_matrix(tensors));
}
BENCHMARK(BM_SimilarityMatrix)->Arg(10)->Arg(26)->Unit(benchmark::kMillisecond);

static void BM_Louvain(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> w(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) w[i * n + j] = w[j * n + i] = u(rng);
  }
  const auto net = MetaNetwork::from_weights(n, w);
  for (auto _ : state) benchmark::DoNotOptimize(louvain_detect(net, 1.0));
}
BENCHMARK(BM_Louvain)->Arg(26)->Arg(100)->Arg(300);

static void BM_DeltaCon(benchmark::State& state) {
  const auto p = planted(static_cast<std::size_t>(state.range(0)), 2, 60);
  const auto plan = slice_windows(p.network, 60);
  const auto g1 = aggregate_window(p.network, plan[0], 0);
  const auto g2 = aggregate_window(p.network, plan[1], 1);
  for (auto _ : state) benchmark::DoNotOptimize(deltacon_similarity(g1, g2));
}
BENCHMARK(BM_DeltaCon)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
