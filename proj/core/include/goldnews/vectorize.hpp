#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "goldnews/textprep.hpp"

namespace goldnews {

// Sorted (index, value) pairs over a fixed dimension; indices strictly
// increasing, values nonzero.
class SparseVector {
 public:
  SparseVector() = default;
  explicit SparseVector(std::size_t dimension) : dimension_(dimension) {}

  // Entries may arrive in any order; duplicates are summed and zeros dropped.
  // Throws InputError for an index >= dimension.
  static SparseVector from_entries(std::size_t dimension,
                                   std::vector<std::pair<std::uint32_t, double>> entries);

  std::size_t dimension() const { return dimension_; }
  std::size_t nonzeros() const { return indices_.size(); }
  bool empty() const { return indices_.empty(); }
  std::span<const std::uint32_t> indices() const { return indices_; }
  std::span<const double> values() const { return values_; }

  double norm() const;
  // Throws InputError when dense.size() != dimension().
  double dot(std::span<const double> dense) const;
  SparseVector scaled(double factor) const;
  std::vector<double> to_dense() const;

  friend bool operator==(const SparseVector&, const SparseVector&) = default;

 private:
  std::size_t dimension_ = 0;
  std::vector<std::uint32_t> indices_;
  std::vector<double> values_;
};

// Lexicographically indexed n-gram terms.
class Vocabulary {
 public:
  Vocabulary() = default;
  // Sorts and deduplicates.
  Vocabulary(std::vector<std::string> terms, int max_n);

  std::size_t size() const { return terms_.size(); }
  int max_n() const { return max_n_; }
  const std::string& term(std::size_t index) const { return terms_[index]; }
  const std::vector<std::string>& terms() const { return terms_; }
  std::optional<std::size_t> index_of(const std::string& term) const;

  friend bool operator==(const Vocabulary& a, const Vocabulary& b) {
    return a.max_n_ == b.max_n_ && a.terms_ == b.terms_;
  }

 private:
  std::vector<std::string> terms_;
  std::unordered_map<std::string, std::size_t> index_;
  int max_n_ = 1;
};

// Raw counts times smoothed idf = ln((1 + N) / (1 + df)) + 1, L2-normalized.
class TfIdfModel {
 public:
  TfIdfModel() = default;
  TfIdfModel(Vocabulary vocabulary, std::vector<double> idf, std::size_t document_count);

  const Vocabulary& vocabulary() const { return vocabulary_; }
  std::span<const double> idf() const { return idf_; }
  std::size_t document_count() const { return document_count_; }
  std::size_t dimension() const { return vocabulary_.size(); }
  int max_n() const { return vocabulary_.max_n(); }

  SparseVector transform(const TokenSequence& doc) const;

  // {max_n, document_count, terms: [{term, index, idf}]}
  std::string to_json() const;
  static TfIdfModel from_json(std::string_view json);
  void save(const std::filesystem::path& path) const;
  static TfIdfModel load(const std::filesystem::path& path);

  friend bool operator==(const TfIdfModel&, const TfIdfModel&) = default;

 private:
  Vocabulary vocabulary_;
  std::vector<double> idf_;
  std::size_t document_count_ = 0;
};

// Throws InputError for an empty corpus or max_n outside 1..3.
TfIdfModel fit_tfidf(std::span<const TokenSequence> corpus, int max_n);

SparseVector transform_tfidf(const TokenSequence& doc, const TfIdfModel& model);

// Word vectors of one fixed dimension; unknown words map to a zero vector.
class EmbeddingTable {
 public:
  explicit EmbeddingTable(std::size_t dimension);

  std::size_t dimension() const { return dimension_; }
  std::size_t size() const { return index_.size(); }
  bool contains(const std::string& word) const { return index_.contains(word); }

  // Later definitions of a word replace earlier ones.
  void insert(const std::string& word, std::span<const float> vector);
  std::span<const float> lookup(const std::string& word) const;

 private:
  std::size_t dimension_;
  std::vector<float> storage_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<float> fallback_;
};

// GloVe text format: word followed by expected_dim reals, whitespace separated.
// Throws ParseError (with line number) on a width mismatch or a bad number,
// IoError when unreadable.
EmbeddingTable parse_glove(std::istream& in, std::size_t expected_dim);
EmbeddingTable load_glove(const std::filesystem::path& path, std::size_t expected_dim);

// max_len x dimension, row-major. Rows past the mask are zero.
struct SequenceMatrix {
  std::size_t max_len = 0;
  std::size_t dimension = 0;
  std::vector<float> data;
  std::vector<std::uint8_t> mask;

  std::span<const float> row(std::size_t i) const { return {data.data() + i * dimension, dimension}; }
};

inline constexpr std::size_t kDefaultMaxSequenceLength = 32;

// Throws InputError for max_len == 0.
SequenceMatrix embed_sequence(const TokenSequence& doc, const EmbeddingTable& table,
                              std::size_t max_len = kDefaultMaxSequenceLength);

}  // namespace goldnews
