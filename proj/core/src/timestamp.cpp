#include "goldnews/timestamp.hpp"

#include <array>
#include <cstdio>

#include "goldnews/error.hpp"

namespace goldnews {
namespace {

constexpr std::string_view kModule = "timestamp";

[[noreturn]] void fail(std::string_view what, std::string_view text) {
  throw InputError(std::string(kModule),
                   std::string(what) + " '" + std::string(text) + "'");
}

bool read_digits(std::string_view text, std::size_t& pos, std::size_t count, int& out) {
  if (pos + count > text.size()) return false;
  int value = 0;
  for (std::size_t i = 0; i < count; ++i) {
    const char c = text[pos + i];
    if (c < '0' || c > '9') return false;
    value = value * 10 + (c - '0');
  }
  pos += count;
  out = value;
  return true;
}

Date make_date(int y, int m, int d, std::string_view text) {
  const Date date{std::chrono::year{y}, std::chrono::month{static_cast<unsigned>(m)},
                  std::chrono::day{static_cast<unsigned>(d)}};
  if (!date.ok()) fail("invalid calendar date", text);
  return date;
}

std::chrono::seconds make_time(int h, int m, int s, std::string_view text) {
  if (h > 23 || m > 59 || s > 60) fail("invalid time of day", text);
  return std::chrono::hours{h} + std::chrono::minutes{m} + std::chrono::seconds{s};
}

std::optional<std::chrono::minutes> read_offset(std::string_view text, std::size_t& pos,
                                                std::string_view whole) {
  if (pos >= text.size()) return std::nullopt;
  if (text[pos] == 'Z' || text[pos] == 'z') {
    ++pos;
    return std::chrono::minutes{0};
  }
  if (text[pos] != '+' && text[pos] != '-') fail("unexpected characters in timestamp", whole);
  const int sign = text[pos] == '-' ? -1 : 1;
  ++pos;
  int hh = 0;
  int mm = 0;
  if (!read_digits(text, pos, 2, hh)) fail("malformed UTC offset", whole);
  if (pos < text.size() && text[pos] == ':') ++pos;
  if (!read_digits(text, pos, 2, mm)) fail("malformed UTC offset", whole);
  if (hh > 18 || mm > 59) fail("UTC offset out of range", whole);
  return std::chrono::minutes{sign * (hh * 60 + mm)};
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

Timestamp parse_timestamp(std::string_view raw) {
  const std::string_view text = trim(raw);
  std::size_t pos = 0;
  int y = 0;
  int mo = 0;
  int d = 0;
  if (!read_digits(text, pos, 4, y) || pos >= text.size() || text[pos++] != '-' ||
      !read_digits(text, pos, 2, mo) || pos >= text.size() || text[pos++] != '-' ||
      !read_digits(text, pos, 2, d)) {
    fail("expected YYYY-MM-DD", raw);
  }
  Timestamp ts;
  ts.date = make_date(y, mo, d, raw);
  if (pos == text.size()) return ts;
  if (text[pos] != 'T' && text[pos] != 't' && text[pos] != ' ') fail("unexpected characters in timestamp", raw);
  ++pos;
  int h = 0;
  int mi = 0;
  int s = 0;
  if (!read_digits(text, pos, 2, h) || pos >= text.size() || text[pos++] != ':' ||
      !read_digits(text, pos, 2, mi)) {
    fail("expected HH:MM", raw);
  }
  if (pos < text.size() && text[pos] == ':') {
    ++pos;
    if (!read_digits(text, pos, 2, s)) fail("expected seconds", raw);
  }
  ts.time_of_day = make_time(h, mi, s, raw);
  ts.utc_offset = read_offset(text, pos, raw);
  if (pos != text.size()) fail("unexpected characters in timestamp", raw);
  return ts;
}

Timestamp parse_timestamp(std::string_view raw, std::string_view format) {
  if (format.empty() || format == "iso") return parse_timestamp(raw);
  const std::string_view text = trim(raw);
  int y = -1;
  int mo = -1;
  int d = -1;
  int h = -1;
  int mi = 0;
  int s = 0;
  std::size_t pos = 0;
  for (std::size_t f = 0; f < format.size(); ++f) {
    if (format[f] != '%') {
      if (pos >= text.size() || text[pos] != format[f]) fail("timestamp does not match format", raw);
      ++pos;
      continue;
    }
    if (++f >= format.size()) throw InputError(std::string(kModule), "dangling '%' in date format");
    bool ok = true;
    switch (format[f]) {
      case 'Y': ok = read_digits(text, pos, 4, y); break;
      case 'y':
        ok = read_digits(text, pos, 2, y);
        // POSIX pivot: 69-99 -> 19xx, 00-68 -> 20xx.
        y += y >= 69 ? 1900 : 2000;
        break;
      case 'm': ok = read_digits(text, pos, 2, mo); break;
      case 'd': ok = read_digits(text, pos, 2, d); break;
      case 'H': ok = read_digits(text, pos, 2, h); break;
      case 'M': ok = read_digits(text, pos, 2, mi); break;
      case 'S': ok = read_digits(text, pos, 2, s); break;
      default:
        throw InputError(std::string(kModule),
                         std::string("unsupported date format directive %") + format[f]);
    }
    if (!ok) fail("timestamp does not match format", raw);
  }
  if (pos != text.size() || y < 0 || mo < 0 || d < 0) fail("timestamp does not match format", raw);
  Timestamp ts;
  ts.date = make_date(y, mo, d, raw);
  if (h >= 0) ts.time_of_day = make_time(h, mi, s, raw);
  return ts;
}

Date parse_date(std::string_view text) {
  const Timestamp ts = parse_timestamp(text);
  if (ts.time_of_day) fail("expected a date without time", text);
  return ts.date;
}

std::string format_date(const Date& date) {
  std::array<char, 48> buf{};
  std::snprintf(buf.data(), buf.size(), "%04d-%02u-%02u", static_cast<int>(date.year()),
                static_cast<unsigned>(date.month()), static_cast<unsigned>(date.day()));
  return buf.data();
}

std::string format_utc_offset(std::chrono::minutes offset) {
  if (offset.count() == 0) return "Z";
  const long total = offset.count();
  const long abs_total = total < 0 ? -total : total;
  std::array<char, 48> buf{};
  std::snprintf(buf.data(), buf.size(), "%c%02ld:%02ld", total < 0 ? '-' : '+', abs_total / 60,
                abs_total % 60);
  return buf.data();
}

std::string format_timestamp(const Timestamp& ts) {
  std::string out = format_date(ts.date);
  if (!ts.time_of_day) return out;
  const long secs = static_cast<long>(ts.time_of_day->count());
  std::array<char, 48> buf{};
  std::snprintf(buf.data(), buf.size(), "T%02ld:%02ld:%02ld", secs / 3600, (secs / 60) % 60, secs % 60);
  out += buf.data();
  if (ts.utc_offset) out += format_utc_offset(*ts.utc_offset);
  return out;
}

std::chrono::minutes parse_utc_offset(std::string_view raw) {
  const std::string_view text = trim(raw);
  if (text == "UTC" || text == "utc" || text == "GMT") return std::chrono::minutes{0};
  std::size_t pos = 0;
  const auto offset = read_offset(text, pos, raw);
  if (!offset || pos != text.size()) fail("malformed UTC offset", raw);
  return *offset;
}

std::chrono::seconds parse_time_of_day(std::string_view raw) {
  const std::string_view text = trim(raw);
  std::size_t pos = 0;
  int h = 0;
  int m = 0;
  int s = 0;
  if (!read_digits(text, pos, 2, h) || pos >= text.size() || text[pos++] != ':' ||
      !read_digits(text, pos, 2, m)) {
    fail("expected HH:MM", raw);
  }
  if (pos < text.size() && text[pos] == ':') {
    ++pos;
    if (!read_digits(text, pos, 2, s)) fail("expected HH:MM:SS", raw);
  }
  if (pos != text.size()) fail("expected HH:MM", raw);
  return make_time(h, m, s, raw);
}

std::chrono::sys_seconds local_seconds(const Timestamp& ts, std::chrono::minutes zone_offset) {
  std::chrono::sys_seconds wall{std::chrono::sys_days{ts.date}};
  if (ts.time_of_day) wall += *ts.time_of_day;
  if (ts.utc_offset) wall += zone_offset - *ts.utc_offset;
  return wall;
}

}  // namespace goldnews
