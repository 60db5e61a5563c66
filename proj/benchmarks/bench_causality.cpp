#include <benchmark/benchmark.h>

#include <chrono>

#include "goldnews/causality.hpp"
#include "goldnews/random.hpp"
#include "goldnews/signal.hpp"

using namespace goldnews;

namespace {

void BM_OlsFit(benchmark::State& state) {
  DeterministicRng rng(3);
  std::vector<XYPoint> pts(static_cast<std::size_t>(state.range(0)));
  for (auto& p : pts) {
    p.x = rng.uniform_real() - 0.5;
    p.y = 0.2 + 1.5 * p.x + rng.uniform_real();
  }
  for (auto _ : state) benchmark::DoNotOptimize(ols_fit(pts));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_OlsFit)->Arg(250)->Arg(10000);

void BM_AggregateAndTest(benchmark::State& state) {
  using namespace std::chrono;
  const auto first = sys_days{year{2017} / April / 3};
  const std::size_t days = 500;
  DeterministicRng rng(4);
  std::vector<Date> calendar;
  std::vector<PricePoint> prices;
  std::vector<ClassifiedNewsItem> items;
  double price = 1300.0;
  for (std::size_t k = 0; k < days; ++k) {
    const Date day{first + std::chrono::days{k}};
    calendar.push_back(day);
    price += rng.uniform_real() - 0.5;
    prices.push_back({day, price});
    for (int j = 0; j < 20; ++j) {
      ClassifiedNewsItem item;
      item.timestamp = {day, seconds{static_cast<long>(rng.uniform_index(86400))}, minutes{0}};
      item.up = rng.uniform_real() < 0.4;
      item.down = !item.up && rng.uniform_real() < 0.6;
      item.constant = !item.up && !item.down;
      items.push_back(item);
    }
  }
  const PriceSeries series(prices);
  const std::vector<AnalysisPeriod> periods = {{"all", calendar.front(), calendar.back()}};
  for (auto _ : state) {
    const auto scores = aggregate_daily(items, {}, calendar);
    benchmark::DoNotOptimize(causality_test(scores.days, series, periods));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(items.size()));
}
BENCHMARK(BM_AggregateAndTest)->Unit(benchmark::kMillisecond);

}  // namespace
