#include <gtest/gtest.h>

#include <chrono>

#include "goldnews/error.hpp"
#include "goldnews/random.hpp"
#include "goldnews/signal.hpp"

using namespace goldnews;
using namespace std::chrono;

namespace {

Date april(int d) { return year{2018} / April / d; }

ClassifiedNewsItem item(int d, int h, int m, int s, bool up, bool constant, bool down) {
  ClassifiedNewsItem it;
  it.timestamp.date = april(d);
  it.timestamp.time_of_day = hours{h} + minutes{m} + seconds{s};
  it.up = up;
  it.constant = constant;
  it.down = down;
  return it;
}

}  // namespace

TEST(Directionality, Examples) {
  EXPECT_EQ(*directionality_score(10, 5, 5), 0.25);
  for (int k = 1; k < 20; ++k) EXPECT_EQ(*directionality_score(k, 0, 0), 1.0);
  EXPECT_EQ(*directionality_score(3, 4, 3), 0.0);
  EXPECT_FALSE(directionality_score(0, 0, 0).has_value());
  EXPECT_THROW(directionality_score(-1, 0, 0), InputError);
}

TEST(Directionality, Properties) {
  DeterministicRng rng(21);
  for (int trial = 0; trial < 5000; ++trial) {
    const auto u = static_cast<std::int64_t>(rng.uniform_index(50));
    const auto c = static_cast<std::int64_t>(rng.uniform_index(50));
    const auto d = static_cast<std::int64_t>(rng.uniform_index(50));
    const auto s = directionality_score(u, c, d);
    if (u + c + d == 0) {
      EXPECT_FALSE(s);
      continue;
    }
    ASSERT_TRUE(s);
    EXPECT_GE(*s, -1.0);
    EXPECT_LE(*s, 1.0);
    EXPECT_EQ(*s == 0.0, u == d);
    EXPECT_EQ(*s > 0.0, u > d);
    const auto k = static_cast<std::int64_t>(1 + rng.uniform_index(1000));
    EXPECT_EQ(*directionality_score(k * u, k * c, k * d), *s);
    EXPECT_EQ(*directionality_score(d, c, u), -*s);
  }
}

TEST(Aggregate, WindowBoundaries) {
  const std::vector<Date> cal = {april(2), april(3), april(4)};
  const std::vector<ClassifiedNewsItem> items = {
      item(3, 16, 59, 0, true, false, false),  item(3, 17, 0, 0, false, false, true),
      item(3, 17, 0, 1, false, true, false),   item(1, 17, 0, 0, true, false, false),
      item(1, 17, 0, 1, true, false, false),  item(4, 17, 0, 1, false, false, true),
      item(2, 9, 0, 0, false, false, false),
  };
  const auto s = aggregate_daily(items, {}, cal);
  ASSERT_EQ(s.days.size(), 3u);
  EXPECT_EQ(s.days[0].n_up, 1u);  // 1 Apr 17:00:01
  EXPECT_EQ(s.days[1].n_up, 1u);
  EXPECT_EQ(s.days[1].n_down, 1u);
  EXPECT_EQ(s.days[2].n_constant, 1u);
  EXPECT_EQ(s.n_dropped, 2u);
  EXPECT_EQ(s.n_assigned + s.n_dropped, items.size());
  EXPECT_EQ(*s.days[0].score, 1.0);
}

TEST(Aggregate, ThreeItemsOneWindow) {
  const std::vector<Date> cal = {april(2)};
  const std::vector<ClassifiedNewsItem> items = {item(2, 8, 0, 0, true, false, false),
                                                 item(2, 9, 0, 0, true, false, false),
                                                 item(2, 10, 0, 0, false, false, true)};
  const auto s = aggregate_daily(items, {}, cal);
  EXPECT_DOUBLE_EQ(*s.days[0].score, 1.0 / 3.0);
}

TEST(Aggregate, WeekendFlowsToNextTradingDay) {
  const std::vector<Date> cal = {year{2018} / April / 6, year{2018} / April / 9};
  const std::vector<ClassifiedNewsItem> items = {ClassifiedNewsItem{{year{2018} / April / 7, hours{12}, {}}, true}};
  const auto s = aggregate_daily(items, {}, cal);
  EXPECT_EQ(s.days[1].n_up, 1u);
  EXPECT_FALSE(s.days[0].score.has_value());
}

TEST(Aggregate, TimezoneOffsets) {
  // 21:30 UTC is 17:30 at UTC-4, past the New York close.
  const std::vector<Date> cal = {april(2), april(3)};
  ClassifiedNewsItem it;
  it.timestamp = Timestamp{april(2), hours{21} + minutes{30}, minutes{0}};
  it.up = true;
  const std::vector<ClassifiedNewsItem> items = {it};
  const auto utc = aggregate_daily(items, {}, cal);
  EXPECT_EQ(utc.days[1].n_up, 1u);
  const auto ny = aggregate_daily(items, {.cutoff = hours{17}, .zone_offset = minutes{-240}}, cal);
  EXPECT_EQ(ny.days[1].n_up, 1u);
  const auto early = aggregate_daily(items, {.cutoff = hours{17}, .zone_offset = minutes{-300}}, cal);
  EXPECT_EQ(early.days[0].n_up, 1u);
}

TEST(Aggregate, ConservationAndSwapSymmetry) {
  DeterministicRng rng(3);
  std::vector<Date> cal;
  for (int d = 2; d <= 27; ++d) {
    if (weekday{sys_days{april(d)}} != Saturday && weekday{sys_days{april(d)}} != Sunday) cal.push_back(april(d));
  }
  std::vector<ClassifiedNewsItem> items;
  for (int i = 0; i < 500; ++i) {
    items.push_back(item(1 + static_cast<int>(rng.uniform_index(30)), static_cast<int>(rng.uniform_index(24)),
                         static_cast<int>(rng.uniform_index(60)), 0, rng.uniform_index(2) != 0,
                         rng.uniform_index(4) == 0, rng.uniform_index(2) != 0));
  }
  const auto s = aggregate_daily(items, {}, cal);
  EXPECT_EQ(s.n_assigned + s.n_dropped, items.size());
  auto swapped = items;
  for (auto& it : swapped) std::swap(it.up, it.down);
  const auto t = aggregate_daily(swapped, {}, cal);
  for (std::size_t k = 0; k < s.days.size(); ++k) {
    ASSERT_EQ(s.days[k].score.has_value(), t.days[k].score.has_value());
    if (s.days[k].score) EXPECT_EQ(*t.days[k].score, -*s.days[k].score);
  }
  EXPECT_THROW(aggregate_daily(items, {}, std::vector<Date>{april(3), april(2)}), InputError);
}

TEST(ScoresCsv, RoundTrip) {
  const std::vector<Date> cal = {april(2), april(3), april(4)};
  const std::vector<ClassifiedNewsItem> items = {item(2, 8, 0, 0, true, false, false),
                                                 item(4, 8, 0, 0, false, true, true),
                                                 item(9, 8, 0, 0, false, true, true)};
  const auto s = aggregate_daily(items, {}, cal);
  const auto text = scores_csv(s);
  EXPECT_EQ(text,
            "date,n_up,n_constant,n_down,score\n"
            "2018-04-02,1,0,0,1\n"
            "2018-04-03,0,0,0,\n"
            "2018-04-04,0,1,1,-0.5\n"
            "# n_dropped=1\n");
  const auto back = parse_scores_csv(text);
  EXPECT_EQ(back.days, s.days);
  EXPECT_EQ(back.n_dropped, 1u);
  EXPECT_EQ(back.n_assigned, 3u);
}

TEST(LabeledNews, Parses) {
  const auto items = parse_labeled_news(
      "id,date,text,PriceUp,PriceConstant,PriceDown\n1,2018-04-02T10:00:00,x,1,0,1\n");
  ASSERT_EQ(items.size(), 1u);
  EXPECT_TRUE(items[0].up);
  EXPECT_TRUE(items[0].down);
  EXPECT_FALSE(items[0].constant);
  EXPECT_THROW(parse_labeled_news("id,date,PriceUp\n1,2018-04-02,1\n"), SchemaError);
}
