#include "goldnews/textprep.hpp"

#include <array>
#include <cctype>
#include <cstdint>
#include <cstdio>
#include <sstream>

#include "goldnews/csv.hpp"
#include "goldnews/error.hpp"

namespace goldnews {
namespace {

constexpr std::string_view kModule = "textprep";

// Placeholder for a masked number between masking and tokenization.
constexpr char kNumberMark = '\x01';

bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_ascii_alnum(char c) {
  return is_digit(c) || (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}

// Length of a currency sign at pos, or 0.
std::size_t currency_sign_length(std::string_view s, std::size_t pos) {
  if (s[pos] == '$') return 1;
  if (s.substr(pos).starts_with("\xE2\x82\xAC")) return 3;  // euro sign
  if (s.substr(pos).starts_with("\xC2\xA3")) return 2;      // pound sign
  return 0;
}

// Length of the number starting at pos, or 0.
std::size_t number_length(std::string_view s, std::size_t pos) {
  std::size_t j = pos + currency_sign_length(s, pos);
  if (j >= s.size() || !is_digit(s[j])) return 0;
  while (j < s.size() && is_digit(s[j])) ++j;
  // Thousands groups: exactly three digits not followed by a fourth.
  while (j + 3 < s.size() && s[j] == ',' && is_digit(s[j + 1]) && is_digit(s[j + 2]) &&
         is_digit(s[j + 3]) && (j + 4 >= s.size() || !is_digit(s[j + 4]))) {
    j += 4;
  }
  if (j + 1 < s.size() && s[j] == '.' && is_digit(s[j + 1])) {
    ++j;
    while (j < s.size() && is_digit(s[j])) ++j;
  }
  if (j < s.size() && s[j] == '%') ++j;
  return j - pos;
}

bool is_premasked_word(std::string_view s, std::size_t pos) {
  if (pos + 3 > s.size()) return false;
  if (pos > 0 && is_ascii_alnum(s[pos - 1])) return false;
  if (pos + 3 < s.size() && is_ascii_alnum(s[pos + 3])) return false;
  auto lower = [](char c) { return static_cast<char>(c >= 'A' && c <= 'Z' ? c + 32 : c); };
  return lower(s[pos]) == 'n' && lower(s[pos + 1]) == 'u' && lower(s[pos + 2]) == 'm';
}

std::string mask_numbers(std::string_view s) {
  std::string out;
  out.reserve(s.size() + 8);
  std::size_t i = 0;
  while (i < s.size()) {
    if (const std::size_t len = number_length(s, i); len > 0) {
      out += ' ';
      out += kNumberMark;
      out += ' ';
      i += len;
    } else if (is_premasked_word(s, i)) {
      out += ' ';
      out += kNumberMark;
      out += ' ';
      i += 3;
    } else {
      const auto byte = static_cast<unsigned char>(s[i]);
      out += byte < 0x20 || byte == 0x7F ? ' ' : s[i];
      ++i;
    }
  }
  return out;
}

// Decodes one code point; returns its byte length (1 for invalid bytes, with
// cp set to U+FFFD).
std::size_t decode(std::string_view s, std::size_t pos, char32_t& cp) {
  const auto lead = static_cast<unsigned char>(s[pos]);
  std::size_t len = 0;
  if (lead < 0x80) {
    cp = lead;
    return 1;
  } else if ((lead & 0xE0) == 0xC0) {
    len = 2;
    cp = lead & 0x1F;
  } else if ((lead & 0xF0) == 0xE0) {
    len = 3;
    cp = lead & 0x0F;
  } else if ((lead & 0xF8) == 0xF0) {
    len = 4;
    cp = lead & 0x07;
  } else {
    cp = 0xFFFD;
    return 1;
  }
  if (pos + len > s.size()) {
    cp = 0xFFFD;
    return 1;
  }
  for (std::size_t k = 1; k < len; ++k) {
    const auto cont = static_cast<unsigned char>(s[pos + k]);
    if ((cont & 0xC0) != 0x80) {
      cp = 0xFFFD;
      return 1;
    }
    cp = (cp << 6) | (cont & 0x3F);
  }
  return len;
}

void encode(char32_t cp, std::string& out) {
  if (cp < 0x80) {
    out += static_cast<char>(cp);
  } else if (cp < 0x800) {
    out += static_cast<char>(0xC0 | (cp >> 6));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else if (cp < 0x10000) {
    out += static_cast<char>(0xE0 | (cp >> 12));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else {
    out += static_cast<char>(0xF0 | (cp >> 18));
    out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  }
}

struct Range {
  char32_t lo;
  char32_t hi;
};

// Punctuation, symbols and separators outside ASCII.
constexpr std::array<Range, 16> kNonAsciiPunctuation = {{
    {0x00A0, 0x00BF}, {0x00D7, 0x00D7}, {0x00F7, 0x00F7}, {0x2000, 0x206F},
    {0x20A0, 0x20CF}, {0x2100, 0x214F}, {0x2190, 0x23FF}, {0x2500, 0x27BF},
    {0x2E00, 0x2E7F}, {0x3000, 0x303F}, {0xFE30, 0xFE4F}, {0xFF00, 0xFF0F},
    {0xFF1A, 0xFF20}, {0xFF3B, 0xFF40}, {0xFF5B, 0xFF65}, {0x1F000, 0x1FAFF},
}};

bool is_punctuation(char32_t cp) {
  if (cp < 0x80) {
    const char c = static_cast<char>(cp);
    return !is_ascii_alnum(c) && c != ' ' && c != '\t' && c != '\n' && c != '\r' && c != '\f' &&
           c != '\v' && c != kNumberMark;
  }
  if (cp == 0xFFFD) return true;
  for (const auto& r : kNonAsciiPunctuation) {
    if (cp >= r.lo && cp <= r.hi) return true;
  }
  return false;
}

char32_t fold_case(char32_t cp) {
  if (cp >= 'A' && cp <= 'Z') return cp + 32;
  if (cp >= 0xC0 && cp <= 0xDE && cp != 0xD7) return cp + 32;
  return cp;
}

// Punctuation to spaces, then lowercase.
std::string strip_and_fold(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  std::size_t i = 0;
  while (i < s.size()) {
    char32_t cp = 0;
    const std::size_t len = decode(s, i, cp);
    if (is_punctuation(cp)) {
      out += ' ';
    } else {
      encode(fold_case(cp), out);
    }
    i += len;
  }
  return out;
}

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 14695981039346656037ULL;
  for (char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace

std::set<std::string> PreprocessConfig::default_stopwords() {
  return {"a", "an", "the", "of", "in", "on", "at", "and", "for"};
}

std::set<std::string> PreprocessConfig::default_preserve() {
  return {"up", "down", "above", "below", "under", "after", "before", "to", "higher", "lower"};
}

PreprocessConfig PreprocessConfig::baseline() {
  return PreprocessConfig{true, default_stopwords(), default_preserve()};
}

PreprocessConfig PreprocessConfig::embedding() {
  return PreprocessConfig{false, default_stopwords(), default_preserve()};
}

bool PreprocessConfig::removes(const std::string& token) const {
  return filter_stopwords && stopwords.contains(token) && !preserve.contains(token);
}

std::string PreprocessConfig::fingerprint() const {
  std::string canon = "textprep/1;filter=";
  canon += filter_stopwords ? '1' : '0';
  // Only the effective removal set matters, and only when filtering.
  canon += ";remove=";
  if (filter_stopwords) {
    for (const auto& w : stopwords) {
      if (!preserve.contains(w)) {
        canon += w;
        canon += '\n';
      }
    }
  }
  std::array<char, 17> buf{};
  std::snprintf(buf.data(), buf.size(), "%016llx", static_cast<unsigned long long>(fnv1a(canon)));
  return buf.data();
}

TokenSequence preprocess(std::string_view text, const PreprocessConfig& config) {
  const std::string cleaned = strip_and_fold(mask_numbers(text));
  TokenSequence tokens;
  std::size_t i = 0;
  while (i < cleaned.size()) {
    while (i < cleaned.size() && std::isspace(static_cast<unsigned char>(cleaned[i]))) ++i;
    std::size_t j = i;
    while (j < cleaned.size() && !std::isspace(static_cast<unsigned char>(cleaned[j]))) ++j;
    if (j > i) {
      std::string token = cleaned.substr(i, j - i);
      if (token.size() == 1 && token[0] == kNumberMark) {
        tokens.emplace_back(kNumberToken);
      } else if (!config.removes(token)) {
        tokens.push_back(std::move(token));
      }
    }
    i = j;
  }
  return tokens;
}

std::vector<std::string> ngrams(std::span<const std::string> tokens, int max_n) {
  if (max_n < 1 || max_n > 3) {
    throw InputError(std::string(kModule), "n-gram order must be 1, 2 or 3, got " + std::to_string(max_n));
  }
  std::vector<std::string> out;
  for (int n = 1; n <= max_n; ++n) {
    const auto un = static_cast<std::size_t>(n);
    if (tokens.size() < un) break;
    for (std::size_t start = 0; start + un <= tokens.size(); ++start) {
      std::string gram = tokens[start];
      for (std::size_t k = 1; k < un; ++k) {
        gram += ' ';
        gram += tokens[start + k];
      }
      out.push_back(std::move(gram));
    }
  }
  return out;
}

std::set<std::string> load_word_list(const std::filesystem::path& path) {
  std::istringstream in(csv::read_text_file(path, kModule));
  std::set<std::string> words;
  std::string line;
  while (std::getline(in, line)) {
    std::size_t b = 0;
    while (b < line.size() && std::isspace(static_cast<unsigned char>(line[b]))) ++b;
    std::size_t e = line.size();
    while (e > b && std::isspace(static_cast<unsigned char>(line[e - 1]))) --e;
    if (e == b || line[b] == '#') continue;
    std::string word = line.substr(b, e - b);
    for (char& c : word) {
      if (c >= 'A' && c <= 'Z') c = static_cast<char>(c + 32);
    }
    words.insert(std::move(word));
  }
  return words;
}

}  // namespace goldnews
