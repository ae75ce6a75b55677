#include <benchmark/benchmark.h>

#include <random>

#include "foxres/semidirect.hpp"

using namespace foxres;

static GWord randomRaw(std::mt19937_64& rng, const IteratedProduct& G, int len) {
  GWord w;
  for (int k = 0; k < len; ++k) {
    int q = 1 + static_cast<int>(rng() % G.ell());
    int i = 1 + static_cast<int>(rng() % G.exponent(q));
    w.push_back({i, q, rng() % 2 ? 1 : -1});
  }
  return w;
}

static void BM_NormalizeP5(benchmark::State& state) {
  IteratedProduct G = pure_braid(5);
  std::mt19937_64 rng(1);
  std::vector<GWord> words;
  for (int k = 0; k < 64; ++k) words.push_back(randomRaw(rng, G, 16));
  size_t k = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(normalize(G, words[k++ % words.size()]));
  }
}
BENCHMARK(BM_NormalizeP5);

BENCHMARK_MAIN();
