#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace goldnews::csv {

// RFC-4180 table. rows[i] was read starting at physical line row_lines[i].
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::size_t> row_lines;

  std::optional<std::size_t> column(std::string_view name) const;
};

struct ReadOptions {
  // Lines whose first byte is '#' (outside quotes) are skipped.
  bool skip_comment_lines = false;
};

// Throws ParseError on unterminated quotes or rows whose width differs from
// the header's.
Table parse(std::string_view text, const ReadOptions& options = {});

// Reads a whole file, rejecting non-UTF-8 content with EncodingError.
std::string read_text_file(const std::filesystem::path& path, std::string_view module);
Table read_file(const std::filesystem::path& path, std::string_view module,
                const ReadOptions& options = {});

void write_row(std::ostream& out, std::span<const std::string> fields);

std::string escape(std::string_view field);

bool is_valid_utf8(std::string_view text);

// Shortest decimal form that round-trips to the same double.
std::string format_real(double value);

// strtod-style decimal parse of the whole field.
std::optional<double> parse_real(std::string_view text);

void write_text_file(const std::filesystem::path& path, std::string_view contents,
                     std::string_view module);

}  // namespace goldnews::csv
