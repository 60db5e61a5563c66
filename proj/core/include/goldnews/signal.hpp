#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "goldnews/timestamp.hpp"

namespace goldnews {

struct ClassifiedNewsItem {
  Timestamp timestamp;
  bool up = false;
  bool constant = false;
  bool down = false;
};

// (up - down) / (up + constant + down); empty when all three are zero.
// Throws InputError on a negative count.
std::optional<double> directionality_score(std::int64_t n_up, std::int64_t n_constant, std::int64_t n_down);

struct DailyScore {
  Date day{};
  std::size_t n_up = 0;
  std::size_t n_constant = 0;
  std::size_t n_down = 0;
  std::optional<double> score;

  friend bool operator==(const DailyScore&, const DailyScore&) = default;
};

struct WindowConfig {
  std::chrono::seconds cutoff = std::chrono::hours{17};
  // Offset of the price quotes' timezone from UTC.
  std::chrono::minutes zone_offset{0};
};

struct DailySeries {
  std::vector<DailyScore> days;
  std::size_t n_assigned = 0;
  std::size_t n_dropped = 0;
};

// Trading day d_k collects items with local time in
// (cutoff on d_{k-1}, cutoff on d_k]; the first day's window opens at the
// cutoff on the preceding calendar day. Items outside every window are
// dropped and counted. Each item adds to every direction it carries.
// Throws InputError unless the calendar is strictly ascending.
DailySeries aggregate_daily(std::span<const ClassifiedNewsItem> items, const WindowConfig& window,
                            std::span<const Date> calendar);

// date,n_up,n_constant,n_down,score then a "# n_dropped=K" footer.
void write_scores_csv(std::ostream& out, const DailySeries& series);
std::string scores_csv(const DailySeries& series);

// n_assigned is not stored in the file and reads back as the sum of the
// per-day direction counts.
DailySeries parse_scores_csv(std::string_view text);
DailySeries load_scores_csv(const std::filesystem::path& path);

// Reads a labeled-headline CSV with a date column and PriceUp,
// PriceConstant, PriceDown 0/1 columns.
std::vector<ClassifiedNewsItem> parse_labeled_news(std::string_view text);
std::vector<ClassifiedNewsItem> load_labeled_news(const std::filesystem::path& path);

}  // namespace goldnews
