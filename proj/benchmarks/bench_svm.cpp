#include <benchmark/benchmark.h>

#include "bench_data.hpp"
#include "goldnews/classify.hpp"
#include "goldnews/textprep.hpp"
#include "goldnews/vectorize.hpp"

using namespace goldnews;

namespace {

struct Data {
  std::vector<AnnotatedHeadline> headlines;
  TfIdfModel tfidf;
  std::vector<SparseVector> x;
  std::vector<int> y;
};

Data data(std::size_t n) {
  Data d;
  d.headlines = bench::headlines(n, 2);
  const auto cfg = PreprocessConfig::baseline();
  std::vector<TokenSequence> docs;
  for (const auto& h : d.headlines) docs.push_back(preprocess(h.text, cfg));
  d.tfidf = fit_tfidf(docs, 1);
  for (std::size_t i = 0; i < n; ++i) {
    d.x.push_back(transform_tfidf(docs[i], d.tfidf));
    d.y.push_back(d.headlines[i].labels[Category::PriceUp] ? 1 : -1);
  }
  return d;
}

void BM_TrainSvm(benchmark::State& state) {
  const auto d = data(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(train_svm(d.x, d.y, {}));
  state.SetItemsProcessed(state.iterations() * state.range(0) * SvmHyperparams{}.epochs);
}
BENCHMARK(BM_TrainSvm)->Arg(1000)->Arg(11412)->Unit(benchmark::kMillisecond);

// Full nine-category training at the released dataset's size.
void BM_TrainBundle(benchmark::State& state) {
  const auto d = data(11412);
  for (auto _ : state) {
    benchmark::DoNotOptimize(train_bundle(d.headlines, PreprocessConfig::baseline(), d.tfidf));
  }
}
BENCHMARK(BM_TrainBundle)->Unit(benchmark::kMillisecond);

void BM_Classify(benchmark::State& state) {
  const auto d = data(2000);
  const auto bundle = train_bundle(d.headlines, PreprocessConfig::baseline(), d.tfidf);
  for (auto _ : state) {
    for (const auto& h : d.headlines) benchmark::DoNotOptimize(bundle.classify(h.text));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(d.headlines.size()));
}
BENCHMARK(BM_Classify);

}  // namespace
