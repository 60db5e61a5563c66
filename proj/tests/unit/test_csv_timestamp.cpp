#include <gtest/gtest.h>

#include <chrono>
#include <cmath>

#include "goldnews/csv.hpp"
#include "goldnews/error.hpp"
#include "goldnews/timestamp.hpp"
#include "synthetic.hpp"

using namespace goldnews;
using namespace std::chrono;

TEST(Csv, ParsesQuotedFieldsAndCrlf) {
  const auto t = csv::parse("a,b\r\n\"x, \"\"y\"\"\",2\r\n\r\nz,\"multi\nline\"\n");
  ASSERT_EQ(t.header, (std::vector<std::string>{"a", "b"}));
  ASSERT_EQ(t.rows.size(), 2u);
  EXPECT_EQ(t.rows[0][0], "x, \"y\"");
  EXPECT_EQ(t.rows[1][1], "multi\nline");
  EXPECT_EQ(t.row_lines[0], 2u);
  EXPECT_EQ(t.row_lines[1], 4u);
  EXPECT_EQ(t.column("b"), 1u);
  EXPECT_FALSE(t.column("c").has_value());
}

TEST(Csv, StripsBom) {
  const auto t = csv::parse("\xEF\xBB\xBFid,text\n1,x\n");
  EXPECT_EQ(t.header[0], "id");
}

TEST(Csv, RejectsWidthMismatchWithLine) {
  try {
    csv::parse("a,b\n1,2\n3\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
  EXPECT_THROW(csv::parse("a\n\"open\n"), ParseError);
}

TEST(Csv, SkipsCommentsWhenAsked) {
  const auto t = csv::parse("a\n1\n# note\n", {.skip_comment_lines = true});
  EXPECT_EQ(t.rows.size(), 1u);
  EXPECT_THROW(csv::parse("a,b\n1,2\n# note\n"), ParseError);
}

TEST(Csv, EscapeRoundTrip) {
  EXPECT_EQ(csv::escape("plain"), "plain");
  EXPECT_EQ(csv::escape("a,b"), "\"a,b\"");
  EXPECT_EQ(csv::escape("say \"hi\""), "\"say \"\"hi\"\"\"");
}

TEST(Csv, Utf8Validation) {
  EXPECT_TRUE(csv::is_valid_utf8("gold \xE2\x82\xAC"));
  EXPECT_FALSE(csv::is_valid_utf8("bad \xFF"));
  EXPECT_FALSE(csv::is_valid_utf8("\xE2\x82"));
  EXPECT_FALSE(csv::is_valid_utf8("\xC0\xAF"));
}

TEST(Csv, ReadTextFileErrors) {
  testkit::TempDir dir("csv");
  EXPECT_THROW(csv::read_text_file("", "corpus"), IoError);
  EXPECT_THROW(csv::read_text_file(dir.path() / "missing.csv", "corpus"), IoError);
  testkit::write_file(dir.path() / "bad.csv", "a\n\xFE\n");
  try {
    csv::read_text_file(dir.path() / "bad.csv", "corpus");
    FAIL();
  } catch (const EncodingError& e) {
    EXPECT_EQ(e.module(), "corpus");
  }
}

TEST(Csv, RealFormatting) {
  EXPECT_EQ(csv::format_real(0.25), "0.25");
  EXPECT_EQ(csv::format_real(-1.0), "-1");
  const double x = 0.1 + 0.2;
  EXPECT_EQ(*csv::parse_real(csv::format_real(x)), x);
  EXPECT_FALSE(csv::parse_real("1.5x").has_value());
  EXPECT_FALSE(csv::parse_real("").has_value());
}

TEST(Timestamp, ParsesIsoForms) {
  const auto d = parse_timestamp("2018-04-02");
  EXPECT_EQ(d.date, year{2018} / April / 2);
  EXPECT_FALSE(d.time_of_day);
  const auto t = parse_timestamp("2018-04-02T16:59:30+05:30");
  EXPECT_EQ(*t.time_of_day, hours{16} + minutes{59} + seconds{30});
  EXPECT_EQ(*t.utc_offset, minutes{330});
  const auto z = parse_timestamp("2018-04-02 17:00Z");
  EXPECT_EQ(*z.utc_offset, minutes{0});
  EXPECT_THROW(parse_timestamp("2018-02-30"), InputError);
  EXPECT_THROW(parse_timestamp("2018-04-02T25:00"), InputError);
  EXPECT_THROW(parse_timestamp("yesterday"), InputError);
}

TEST(Timestamp, FormatRoundTrips) {
  for (const char* s : {"2018-04-02", "2018-04-02T16:59:30", "2018-04-02T00:00:00-04:00", "2019-12-31T23:59:59+00:00"}) {
    const auto ts = parse_timestamp(s);
    EXPECT_EQ(parse_timestamp(format_timestamp(ts)), ts) << s;
  }
}

TEST(Timestamp, CustomFormat) {
  const auto ts = parse_timestamp("02/04/18 09:15", "%d/%m/%y %H:%M");
  EXPECT_EQ(ts.date, year{2018} / April / 2);
  EXPECT_EQ(*ts.time_of_day, hours{9} + minutes{15});
  EXPECT_THROW(parse_timestamp("2018-04-02", "%d/%m/%Y"), InputError);
}

TEST(Timestamp, LocalSecondsAppliesOffsets) {
  const auto ts = parse_timestamp("2018-04-02T21:00:00Z");
  const auto local = goldnews::local_seconds(ts, minutes{-240});
  EXPECT_EQ(local, sys_days{year{2018} / April / 2} + hours{17});
  const auto naive = parse_timestamp("2018-04-02T17:00:00");
  EXPECT_EQ(goldnews::local_seconds(naive, minutes{-240}), sys_days{year{2018} / April / 2} + hours{17});
  EXPECT_EQ(goldnews::local_seconds(parse_timestamp("2018-04-02"), minutes{60}), sys_seconds{sys_days{year{2018} / April / 2}});
}

TEST(Timestamp, UtcOffsets) {
  EXPECT_EQ(parse_utc_offset("UTC"), minutes{0});
  EXPECT_EQ(parse_utc_offset("-0500"), minutes{-300});
  EXPECT_EQ(format_utc_offset(minutes{-300}), "-05:00");
  EXPECT_THROW(parse_utc_offset("EST"), InputError);
  EXPECT_EQ(parse_time_of_day("17:00"), hours{17});
  EXPECT_THROW(parse_time_of_day("24:00"), InputError);
}
