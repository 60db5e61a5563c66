#pragma once

#include <filesystem>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace goldnews {

// Lowercase tokens with numbers masked as kNumberToken.
using TokenSequence = std::vector<std::string>;

inline constexpr std::string_view kNumberToken = "NUM";

struct PreprocessConfig {
  bool filter_stopwords = true;
  std::set<std::string> stopwords;
  // Exempt from filtering even when listed in stopwords.
  std::set<std::string> preserve;

  // Stop-word filtering with the default lists (TF-IDF path).
  static PreprocessConfig baseline();
  // No filtering (embedding path).
  static PreprocessConfig embedding();

  static std::set<std::string> default_stopwords();
  static std::set<std::string> default_preserve();

  bool removes(const std::string& token) const;

  // Stable 16-hex-digit digest of everything that affects preprocess().
  std::string fingerprint() const;

  friend bool operator==(const PreprocessConfig&, const PreprocessConfig&) = default;
};

// Number masking, punctuation removal, lowercase folding, whitespace
// tokenization, then optional stop-word filtering. A standalone word "num"
// (any case) counts as an already-masked number.
TokenSequence preprocess(std::string_view text, const PreprocessConfig& config);

// All contiguous 1..max_n grams joined by a single space, ordered by n then
// position. Throws InputError unless max_n is 1, 2 or 3.
std::vector<std::string> ngrams(std::span<const std::string> tokens, int max_n);

// Newline-delimited list; blank lines and '#' comments are ignored, entries
// are lowercased.
std::set<std::string> load_word_list(const std::filesystem::path& path);

}  // namespace goldnews
