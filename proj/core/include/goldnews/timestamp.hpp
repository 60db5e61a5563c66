#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <string_view>

namespace goldnews {

using Date = std::chrono::year_month_day;

// A calendar date with an optional time of day and optional UTC offset.
// Without an offset the clock time is taken to be in the analysis timezone.
struct Timestamp {
  Date date{};
  std::optional<std::chrono::seconds> time_of_day;
  std::optional<std::chrono::minutes> utc_offset;

  friend bool operator==(const Timestamp&, const Timestamp&) = default;
};

// Accepts YYYY-MM-DD optionally followed by ('T' | ' ') HH:MM[:SS] and an
// optional 'Z' or +HH:MM / -HH:MM / +HHMM suffix. Throws InputError.
Timestamp parse_timestamp(std::string_view text);

// strptime-style pattern using %Y %y %m %d %H %M %S; "iso" selects
// parse_timestamp.
Timestamp parse_timestamp(std::string_view text, std::string_view format);

Date parse_date(std::string_view text);

std::string format_date(const Date& date);

// Canonical ISO-8601 rendering; round-trips through parse_timestamp.
std::string format_timestamp(const Timestamp& ts);

// "UTC", "Z", "+HH:MM", "-HH:MM", "+HHMM".
std::chrono::minutes parse_utc_offset(std::string_view text);

std::string format_utc_offset(std::chrono::minutes offset);

// "HH:MM" or "HH:MM:SS" as an offset from midnight.
std::chrono::seconds parse_time_of_day(std::string_view text);

// Wall-clock seconds in the zone with the given offset. A timestamp without
// a time of day sits at local midnight; one without an offset is already
// local.
std::chrono::sys_seconds local_seconds(const Timestamp& ts, std::chrono::minutes zone_offset);

}  // namespace goldnews
