#include "goldnews/vectorize.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <map>
#include <unordered_set>

#include <json.hpp>

#include "goldnews/csv.hpp"
#include "goldnews/error.hpp"

namespace goldnews {
namespace {

constexpr std::string_view kModule = "vectorize";

}  // namespace

SparseVector SparseVector::from_entries(std::size_t dimension,
                                        std::vector<std::pair<std::uint32_t, double>> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseVector v(dimension);
  for (std::size_t i = 0; i < entries.size();) {
    const std::uint32_t idx = entries[i].first;
    if (idx >= dimension) {
      throw InputError(std::string(kModule), "sparse index " + std::to_string(idx) +
                                                 " outside dimension " + std::to_string(dimension));
    }
    double sum = 0.0;
    for (; i < entries.size() && entries[i].first == idx; ++i) sum += entries[i].second;
    if (sum != 0.0) {
      v.indices_.push_back(idx);
      v.values_.push_back(sum);
    }
  }
  return v;
}

double SparseVector::norm() const {
  double s = 0.0;
  for (double x : values_) s += x * x;
  return std::sqrt(s);
}

double SparseVector::dot(std::span<const double> dense) const {
  if (dense.size() != dimension_) {
    throw InputError(std::string(kModule), "dimension mismatch: vector " + std::to_string(dimension_) +
                                               " vs weights " + std::to_string(dense.size()));
  }
  double s = 0.0;
  for (std::size_t k = 0; k < indices_.size(); ++k) s += values_[k] * dense[indices_[k]];
  return s;
}

SparseVector SparseVector::scaled(double factor) const {
  SparseVector out(dimension_);
  if (factor == 0.0) return out;
  out.indices_ = indices_;
  out.values_.reserve(values_.size());
  for (double x : values_) out.values_.push_back(x * factor);
  return out;
}

std::vector<double> SparseVector::to_dense() const {
  std::vector<double> dense(dimension_, 0.0);
  for (std::size_t k = 0; k < indices_.size(); ++k) dense[indices_[k]] = values_[k];
  return dense;
}

Vocabulary::Vocabulary(std::vector<std::string> terms, int max_n) : terms_(std::move(terms)), max_n_(max_n) {
  std::sort(terms_.begin(), terms_.end());
  terms_.erase(std::unique(terms_.begin(), terms_.end()), terms_.end());
  index_.reserve(terms_.size());
  for (std::size_t i = 0; i < terms_.size(); ++i) index_.emplace(terms_[i], i);
}

std::optional<std::size_t> Vocabulary::index_of(const std::string& term) const {
  const auto it = index_.find(term);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

TfIdfModel::TfIdfModel(Vocabulary vocabulary, std::vector<double> idf, std::size_t document_count)
    : vocabulary_(std::move(vocabulary)), idf_(std::move(idf)), document_count_(document_count) {
  if (idf_.size() != vocabulary_.size()) {
    throw InputError(std::string(kModule), "idf length differs from vocabulary size");
  }
}

SparseVector TfIdfModel::transform(const TokenSequence& doc) const {
  std::map<std::uint32_t, double> counts;
  for (const auto& gram : ngrams(doc, vocabulary_.max_n())) {
    if (const auto idx = vocabulary_.index_of(gram)) counts[static_cast<std::uint32_t>(*idx)] += 1.0;
  }
  std::vector<std::pair<std::uint32_t, double>> entries;
  entries.reserve(counts.size());
  double sq = 0.0;
  for (const auto& [idx, count] : counts) {
    const double w = count * idf_[idx];
    entries.emplace_back(idx, w);
    sq += w * w;
  }
  if (sq > 0.0) {
    const double inv = 1.0 / std::sqrt(sq);
    for (auto& e : entries) e.second *= inv;
  }
  return SparseVector::from_entries(dimension(), std::move(entries));
}

std::string TfIdfModel::to_json() const {
  nlohmann::json terms = nlohmann::json::array();
  for (std::size_t i = 0; i < vocabulary_.size(); ++i) {
    terms.push_back({{"term", vocabulary_.term(i)}, {"index", i}, {"idf", idf_[i]}});
  }
  const nlohmann::json doc = {
      {"max_n", vocabulary_.max_n()}, {"document_count", document_count_}, {"terms", std::move(terms)}};
  return doc.dump();
}

TfIdfModel TfIdfModel::from_json(std::string_view json) {
  try {
    const auto doc = nlohmann::json::parse(json);
    const int max_n = doc.at("max_n").get<int>();
    if (max_n < 1 || max_n > 3) throw LoadError(std::string(kModule), "max_n must be 1, 2 or 3");
    const auto document_count = doc.at("document_count").get<std::size_t>();
    const auto& terms = doc.at("terms");
    std::vector<std::string> words(terms.size());
    std::vector<double> idf(terms.size(), 0.0);
    std::vector<bool> filled(terms.size(), false);
    for (const auto& t : terms) {
      const auto idx = t.at("index").get<std::size_t>();
      if (idx >= terms.size() || filled[idx]) {
        throw LoadError(std::string(kModule), "term indices are not a bijection onto 0..M-1");
      }
      filled[idx] = true;
      words[idx] = t.at("term").get<std::string>();
      idf[idx] = t.at("idf").get<double>();
      if (!(idf[idx] > 0.0)) throw LoadError(std::string(kModule), "idf must be positive");
    }
    if (!std::is_sorted(words.begin(), words.end()) ||
        std::adjacent_find(words.begin(), words.end()) != words.end()) {
      throw LoadError(std::string(kModule), "terms are not in strict lexicographic index order");
    }
    return TfIdfModel(Vocabulary(std::move(words), max_n), std::move(idf), document_count);
  } catch (const nlohmann::json::exception& e) {
    throw LoadError(std::string(kModule), std::string("malformed TF-IDF model: ") + e.what());
  }
}

void TfIdfModel::save(const std::filesystem::path& path) const {
  csv::write_text_file(path, to_json(), kModule);
}

TfIdfModel TfIdfModel::load(const std::filesystem::path& path) {
  return from_json(csv::read_text_file(path, kModule));
}

TfIdfModel fit_tfidf(std::span<const TokenSequence> corpus, int max_n) {
  if (corpus.empty()) throw InputError(std::string(kModule), "cannot fit TF-IDF on an empty corpus");
  std::map<std::string, std::size_t> document_frequency;
  for (const auto& doc : corpus) {
    const auto grams = ngrams(doc, max_n);
    const std::unordered_set<std::string> unique(grams.begin(), grams.end());
    for (const auto& g : unique) ++document_frequency[g];
  }
  std::vector<std::string> terms;
  std::vector<double> idf;
  terms.reserve(document_frequency.size());
  idf.reserve(document_frequency.size());
  const double n_docs = static_cast<double>(corpus.size());
  // std::map iteration is already lexicographic, matching Vocabulary order.
  for (const auto& [term, df] : document_frequency) {
    terms.push_back(term);
    idf.push_back(std::log((1.0 + n_docs) / (1.0 + static_cast<double>(df))) + 1.0);
  }
  return TfIdfModel(Vocabulary(std::move(terms), max_n), std::move(idf), corpus.size());
}

SparseVector transform_tfidf(const TokenSequence& doc, const TfIdfModel& model) {
  return model.transform(doc);
}

EmbeddingTable::EmbeddingTable(std::size_t dimension) : dimension_(dimension), fallback_(dimension, 0.0F) {
  if (dimension == 0) throw InputError(std::string(kModule), "embedding dimension must be positive");
}

void EmbeddingTable::insert(const std::string& word, std::span<const float> vector) {
  if (vector.size() != dimension_) {
    throw InputError(std::string(kModule), "embedding for '" + word + "' has dimension " +
                                               std::to_string(vector.size()));
  }
  const auto [it, inserted] = index_.emplace(word, storage_.size() / dimension_);
  if (inserted) {
    storage_.insert(storage_.end(), vector.begin(), vector.end());
  } else {
    std::copy(vector.begin(), vector.end(), storage_.begin() + static_cast<std::ptrdiff_t>(it->second * dimension_));
  }
}

std::span<const float> EmbeddingTable::lookup(const std::string& word) const {
  const auto it = index_.find(word);
  if (it == index_.end()) return fallback_;
  return {storage_.data() + it->second * dimension_, dimension_};
}

EmbeddingTable parse_glove(std::istream& in, std::size_t expected_dim) {
  EmbeddingTable table(expected_dim);
  std::string line;
  std::vector<float> values;
  values.reserve(expected_dim);
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::string_view rest(line);
    auto next_field = [&rest]() -> std::string_view {
      while (!rest.empty() && (rest.front() == ' ' || rest.front() == '\t')) rest.remove_prefix(1);
      std::size_t end = 0;
      while (end < rest.size() && rest[end] != ' ' && rest[end] != '\t') ++end;
      const std::string_view field = rest.substr(0, end);
      rest.remove_prefix(end);
      return field;
    };
    const std::string_view word = next_field();
    if (word.empty()) continue;
    values.clear();
    for (std::string_view f = next_field(); !f.empty(); f = next_field()) {
      float v = 0.0F;
      const auto res = std::from_chars(f.data(), f.data() + f.size(), v);
      if (res.ec != std::errc{} || res.ptr != f.data() + f.size()) {
        throw ParseError(std::string(kModule), "bad number '" + std::string(f) + "'", line_no);
      }
      values.push_back(v);
    }
    if (values.size() != expected_dim) {
      throw ParseError(std::string(kModule),
                       "expected " + std::to_string(expected_dim) + " values, found " +
                           std::to_string(values.size()),
                       line_no);
    }
    table.insert(std::string(word), values);
  }
  if (in.bad()) throw IoError(std::string(kModule), "read failed while parsing embeddings");
  return table;
}

EmbeddingTable load_glove(const std::filesystem::path& path, std::size_t expected_dim) {
  std::ifstream in(path, std::ios::binary);
  if (path.empty() || !in) throw IoError(std::string(kModule), "cannot open '" + path.string() + "'");
  return parse_glove(in, expected_dim);
}

SequenceMatrix embed_sequence(const TokenSequence& doc, const EmbeddingTable& table, std::size_t max_len) {
  if (max_len == 0) throw InputError(std::string(kModule), "sequence length must be at least 1");
  SequenceMatrix m;
  m.max_len = max_len;
  m.dimension = table.dimension();
  m.data.assign(max_len * m.dimension, 0.0F);
  m.mask.assign(max_len, 0);
  const std::size_t kept = std::min(doc.size(), max_len);
  for (std::size_t i = 0; i < kept; ++i) {
    const auto v = table.lookup(doc[i]);
    std::copy(v.begin(), v.end(), m.data.begin() + static_cast<std::ptrdiff_t>(i * m.dimension));
    m.mask[i] = 1;
  }
  return m;
}

}  // namespace goldnews
