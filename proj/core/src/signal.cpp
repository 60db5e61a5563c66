#include "goldnews/signal.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "goldnews/csv.hpp"
#include "goldnews/error.hpp"

namespace goldnews {
namespace {

constexpr std::string_view kModule = "signal";

std::size_t parse_count(const std::string& cell, std::size_t row, std::string_view column) {
  std::size_t value = 0;
  std::size_t pos = 0;
  try {
    value = std::stoul(cell, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (cell.empty() || pos != cell.size() || cell.front() == '-') {
    throw ValidationError(std::string(kModule), std::string(column) + " must be a nonnegative integer", row);
  }
  return value;
}

bool parse_flag(const std::string& cell, std::size_t row, std::string_view column) {
  if (cell == "1") return true;
  if (cell == "0") return false;
  throw ValidationError(std::string(kModule), std::string(column) + " must be 0 or 1, got '" + cell + "'", row);
}

std::size_t require(const csv::Table& t, std::string_view column) {
  const auto c = t.column(column);
  if (!c) throw SchemaError(std::string(kModule), "missing column '" + std::string(column) + "'", std::string(column));
  return *c;
}

}  // namespace

std::optional<double> directionality_score(std::int64_t n_up, std::int64_t n_constant, std::int64_t n_down) {
  if (n_up < 0 || n_constant < 0 || n_down < 0) {
    throw InputError(std::string(kModule), "direction counts must be nonnegative");
  }
  const std::int64_t total = n_up + n_constant + n_down;
  if (total == 0) return std::nullopt;
  return static_cast<double>(n_up - n_down) / static_cast<double>(total);
}

DailySeries aggregate_daily(std::span<const ClassifiedNewsItem> items, const WindowConfig& window,
                            std::span<const Date> calendar) {
  using std::chrono::sys_days;
  using std::chrono::sys_seconds;
  for (std::size_t k = 0; k < calendar.size(); ++k) {
    if (!calendar[k].ok()) throw InputError(std::string(kModule), "invalid calendar date");
    if (k > 0 && !(sys_days{calendar[k - 1]} < sys_days{calendar[k]})) {
      throw InputError(std::string(kModule), "trading calendar must be strictly ascending");
    }
  }
  DailySeries series;
  series.days.resize(calendar.size());
  std::vector<sys_seconds> closes(calendar.size());
  for (std::size_t k = 0; k < calendar.size(); ++k) {
    series.days[k].day = calendar[k];
    closes[k] = sys_seconds{sys_days{calendar[k]}} + window.cutoff;
  }
  if (calendar.empty()) {
    series.n_dropped = items.size();
    return series;
  }
  const sys_seconds opens = closes.front() - std::chrono::days{1};
  for (const auto& item : items) {
    const sys_seconds t = local_seconds(item.timestamp, window.zone_offset);
    if (t <= opens || t > closes.back()) {
      ++series.n_dropped;
      continue;
    }
    const auto k = static_cast<std::size_t>(std::lower_bound(closes.begin(), closes.end(), t) - closes.begin());
    auto& day = series.days[k];
    day.n_up += item.up ? 1 : 0;
    day.n_constant += item.constant ? 1 : 0;
    day.n_down += item.down ? 1 : 0;
    ++series.n_assigned;
  }
  for (auto& day : series.days) {
    day.score = directionality_score(static_cast<std::int64_t>(day.n_up), static_cast<std::int64_t>(day.n_constant),
                                     static_cast<std::int64_t>(day.n_down));
  }
  return series;
}

void write_scores_csv(std::ostream& out, const DailySeries& series) {
  out << "date,n_up,n_constant,n_down,score\n";
  for (const auto& d : series.days) {
    out << format_date(d.day) << ',' << d.n_up << ',' << d.n_constant << ',' << d.n_down << ','
        << (d.score ? csv::format_real(*d.score) : std::string()) << '\n';
  }
  out << "# n_dropped=" << series.n_dropped << '\n';
}

std::string scores_csv(const DailySeries& series) {
  std::ostringstream out;
  write_scores_csv(out, series);
  return out.str();
}

DailySeries parse_scores_csv(std::string_view text) {
  DailySeries series;
  // The footer is the only comment line this format carries.
  std::istringstream lines{std::string(text)};
  std::string line;
  while (std::getline(lines, line)) {
    constexpr std::string_view kFooter = "# n_dropped=";
    if (line.starts_with(kFooter)) {
      try {
        series.n_dropped = std::stoul(line.substr(kFooter.size()));
      } catch (const std::exception&) {
        throw InputError(std::string(kModule), "malformed n_dropped footer");
      }
    }
  }
  const csv::Table table = csv::parse(text, {.skip_comment_lines = true});
  if (table.header.empty()) return series;
  const std::size_t c_date = require(table, "date");
  const std::size_t c_up = require(table, "n_up");
  const std::size_t c_const = require(table, "n_constant");
  const std::size_t c_down = require(table, "n_down");
  const std::size_t c_score = require(table, "score");
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    const auto& row = table.rows[r];
    DailyScore d;
    try {
      d.day = parse_date(row[c_date]);
    } catch (const InputError& e) {
      throw ValidationError(std::string(kModule), e.message(), r + 1);
    }
    d.n_up = parse_count(row[c_up], r + 1, "n_up");
    d.n_constant = parse_count(row[c_const], r + 1, "n_constant");
    d.n_down = parse_count(row[c_down], r + 1, "n_down");
    if (!row[c_score].empty()) {
      d.score = csv::parse_real(row[c_score]);
      if (!d.score || *d.score < -1.0 || *d.score > 1.0) {
        throw ValidationError(std::string(kModule), "score must be a real in [-1, 1]", r + 1);
      }
    }
    series.n_assigned += d.n_up + d.n_constant + d.n_down;
    series.days.push_back(d);
  }
  return series;
}

DailySeries load_scores_csv(const std::filesystem::path& path) {
  return parse_scores_csv(csv::read_text_file(path, kModule));
}

std::vector<ClassifiedNewsItem> parse_labeled_news(std::string_view text) {
  const csv::Table table = csv::parse(text);
  std::vector<ClassifiedNewsItem> items;
  if (table.header.empty()) return items;
  const std::size_t c_date = require(table, "date");
  const std::size_t c_up = require(table, "PriceUp");
  const std::size_t c_const = require(table, "PriceConstant");
  const std::size_t c_down = require(table, "PriceDown");
  items.reserve(table.rows.size());
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    const auto& row = table.rows[r];
    ClassifiedNewsItem item;
    try {
      item.timestamp = parse_timestamp(row[c_date]);
    } catch (const InputError& e) {
      throw ValidationError(std::string(kModule), e.message(), r + 1);
    }
    item.up = parse_flag(row[c_up], r + 1, "PriceUp");
    item.constant = parse_flag(row[c_const], r + 1, "PriceConstant");
    item.down = parse_flag(row[c_down], r + 1, "PriceDown");
    items.push_back(item);
  }
  return items;
}

std::vector<ClassifiedNewsItem> load_labeled_news(const std::filesystem::path& path) {
  return parse_labeled_news(csv::read_text_file(path, kModule));
}

}  // namespace goldnews
