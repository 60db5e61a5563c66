#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "goldnews/category.hpp"
#include "goldnews/timestamp.hpp"

namespace goldnews {

struct AnnotatedHeadline {
  std::string id;
  std::string text;
  std::optional<Timestamp> timestamp;
  LabelSet labels;

  friend bool operator==(const AnnotatedHeadline&, const AnnotatedHeadline&) = default;
};

// Maps source-file columns onto the canonical record. id and date are
// optional; when id is unmapped ids are the zero-based row index.
struct ColumnSchema {
  std::string text_column = "text";
  std::optional<std::string> id_column;
  std::optional<std::string> date_column;
  std::array<std::string, kCategoryCount> label_columns;
  std::string date_format = "iso";

  ColumnSchema();

  const std::string& label_column(Category c) const { return label_columns[index_of(c)]; }

  // id,date,text,<nine categories>
  static ColumnSchema canonical();
};

// Either a JSON object or one `key=value` pair per line ('#' comments).
// Keys: the canonical category names, text, id, date, date_format. Unmapped
// categories keep their canonical column name.
ColumnSchema parse_schema(std::string_view text);
ColumnSchema load_schema(const std::filesystem::path& path);

std::vector<AnnotatedHeadline> parse_dataset(std::string_view csv_text,
                                             const ColumnSchema& schema = ColumnSchema::canonical());
std::vector<AnnotatedHeadline> load_dataset(const std::filesystem::path& path,
                                            const ColumnSchema& schema = ColumnSchema::canonical());

// Writes the canonical CSV layout.
void write_dataset(std::ostream& out, std::span<const AnnotatedHeadline> dataset);

struct CategoryCount {
  std::size_t true_count = 0;
  std::size_t false_count = 0;
  std::size_t total = 0;

  friend bool operator==(const CategoryCount&, const CategoryCount&) = default;
};

struct DatasetSummary {
  std::array<CategoryCount, kCategoryCount> counts{};

  const CategoryCount& operator[](Category c) const { return counts[index_of(c)]; }
  friend bool operator==(const DatasetSummary&, const DatasetSummary&) = default;
};

DatasetSummary summarize(std::span<const AnnotatedHeadline> dataset);

// One annotator's labels, keyed by headline id.
class AnnotationSeries {
 public:
  AnnotationSeries(std::string annotator_id, std::map<std::string, LabelSet> labels);

  static AnnotationSeries from_dataset(std::string annotator_id,
                                       std::span<const AnnotatedHeadline> dataset);

  const std::string& annotator_id() const { return annotator_id_; }
  const std::map<std::string, LabelSet>& labels() const { return labels_; }
  std::size_t size() const { return labels_.size(); }

 private:
  std::string annotator_id_;
  std::map<std::string, LabelSet> labels_;
};

// Cohen's kappa for two aligned binary series. Throws InputError on size
// mismatch or empty input. When chance agreement is 1 the result is 1 for
// perfect agreement and 0 otherwise.
double cohen_kappa(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b);

// Throws InputError when the two series cover different headline ids.
double cohen_kappa(const AnnotationSeries& a, const AnnotationSeries& b, Category category);

struct KappaEntry {
  std::string annotator_a;
  std::string annotator_b;
  Category category;
  double kappa;
};

// Every unordered annotator pair, every category.
std::vector<KappaEntry> pairwise_kappa(std::span<const AnnotationSeries> series);

}  // namespace goldnews
