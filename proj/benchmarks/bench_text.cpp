#include <benchmark/benchmark.h>

#include "bench_data.hpp"
#include "goldnews/textprep.hpp"
#include "goldnews/vectorize.hpp"

using namespace goldnews;

namespace {

std::vector<TokenSequence> docs(std::size_t n) {
  const auto cfg = PreprocessConfig::baseline();
  std::vector<TokenSequence> out;
  for (const auto& h : bench::headlines(n, 1)) out.push_back(preprocess(h.text, cfg));
  return out;
}

void BM_Preprocess(benchmark::State& state) {
  const auto hs = bench::headlines(1000, 1);
  const auto cfg = PreprocessConfig::baseline();
  for (auto _ : state) {
    for (const auto& h : hs) benchmark::DoNotOptimize(preprocess(h.text, cfg));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(hs.size()));
}
BENCHMARK(BM_Preprocess);

void BM_FitTfIdf(benchmark::State& state) {
  const auto corpus = docs(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(fit_tfidf(corpus, 2));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_FitTfIdf)->Arg(1000)->Arg(11412);

void BM_TransformTfIdf(benchmark::State& state) {
  const auto corpus = docs(11412);
  const auto model = fit_tfidf(corpus, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    for (const auto& d : corpus) benchmark::DoNotOptimize(transform_tfidf(d, model));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(corpus.size()));
}
BENCHMARK(BM_TransformTfIdf)->Arg(1)->Arg(3);

}  // namespace
