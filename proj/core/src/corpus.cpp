#include "goldnews/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "goldnews/csv.hpp"
#include "goldnews/error.hpp"

namespace goldnews {
namespace {

constexpr std::string_view kModule = "corpus";

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

void apply_schema_key(ColumnSchema& schema, std::string_view key, std::string value) {
  if (key == "text") {
    schema.text_column = std::move(value);
  } else if (key == "id") {
    schema.id_column = value.empty() ? std::nullopt : std::optional<std::string>(std::move(value));
  } else if (key == "date") {
    schema.date_column = value.empty() ? std::nullopt : std::optional<std::string>(std::move(value));
  } else if (key == "date_format") {
    schema.date_format = std::move(value);
  } else if (const auto c = category_from_name(key)) {
    schema.label_columns[index_of(*c)] = std::move(value);
  } else {
    throw SchemaError(std::string(kModule), "unknown schema key '" + std::string(key) + "'",
                      std::string(key));
  }
}

std::size_t require_column(const csv::Table& table, const std::string& column) {
  const auto idx = table.column(column);
  if (!idx) {
    throw SchemaError(std::string(kModule), "missing column '" + column + "'", column);
  }
  return *idx;
}

}  // namespace

ColumnSchema::ColumnSchema() {
  for (Category c : kAllCategories) label_columns[index_of(c)] = std::string(name(c));
}

ColumnSchema ColumnSchema::canonical() {
  ColumnSchema schema;
  schema.id_column = "id";
  schema.date_column = "date";
  return schema;
}

ColumnSchema parse_schema(std::string_view text) {
  ColumnSchema schema;
  const std::string_view body = trim(text);
  if (body.starts_with('{')) {
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(body);
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(std::string(kModule), std::string("schema JSON: ") + e.what(), 1);
    }
    if (!doc.is_object()) throw InputError(std::string(kModule), "schema JSON must be an object");
    for (const auto& [key, value] : doc.items()) {
      if (!value.is_string()) {
        throw SchemaError(std::string(kModule), "schema value for '" + key + "' must be a string", key);
      }
      apply_schema_key(schema, key, value.get<std::string>());
    }
    return schema;
  }
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view l = trim(line);
    if (l.empty() || l.front() == '#') continue;
    const auto eq = l.find('=');
    if (eq == std::string_view::npos) {
      throw ParseError(std::string(kModule), "expected canonical=source", line_no);
    }
    apply_schema_key(schema, trim(l.substr(0, eq)), std::string(trim(l.substr(eq + 1))));
  }
  return schema;
}

ColumnSchema load_schema(const std::filesystem::path& path) {
  return parse_schema(csv::read_text_file(path, kModule));
}

std::vector<AnnotatedHeadline> parse_dataset(std::string_view csv_text, const ColumnSchema& schema) {
  const csv::Table table = csv::parse(csv_text);
  std::vector<AnnotatedHeadline> out;
  if (table.header.empty()) return out;

  const std::size_t text_col = require_column(table, schema.text_column);
  std::optional<std::size_t> id_col;
  std::optional<std::size_t> date_col;
  if (schema.id_column) id_col = require_column(table, *schema.id_column);
  if (schema.date_column) date_col = require_column(table, *schema.date_column);
  std::array<std::size_t, kCategoryCount> label_col{};
  for (Category c : kAllCategories) label_col[index_of(c)] = require_column(table, schema.label_column(c));

  std::set<std::string> seen_ids;
  out.reserve(table.rows.size());
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    const auto& row = table.rows[r];
    const std::size_t row_no = r + 1;
    AnnotatedHeadline h;
    h.id = id_col ? std::string(trim(row[*id_col])) : std::to_string(r);
    if (h.id.empty()) throw ValidationError(std::string(kModule), "empty id", row_no);
    if (!seen_ids.insert(h.id).second) {
      throw ValidationError(std::string(kModule), "duplicate id '" + h.id + "'", row_no);
    }
    h.text = row[text_col];
    if (trim(h.text).empty()) throw ValidationError(std::string(kModule), "empty headline text", row_no);
    if (date_col) {
      const std::string_view cell = trim(row[*date_col]);
      if (!cell.empty()) {
        try {
          h.timestamp = parse_timestamp(cell, schema.date_format);
        } catch (const InputError& e) {
          throw ValidationError(std::string(kModule), e.message(), row_no);
        }
      }
    }
    for (Category c : kAllCategories) {
      const std::string_view cell = trim(row[label_col[index_of(c)]]);
      if (cell != "0" && cell != "1") {
        throw ValidationError(std::string(kModule),
                              "label '" + std::string(name(c)) + "' must be 0 or 1, got '" +
                                  std::string(cell) + "'",
                              row_no);
      }
      h.labels.set(c, cell == "1");
    }
    out.push_back(std::move(h));
  }
  return out;
}

std::vector<AnnotatedHeadline> load_dataset(const std::filesystem::path& path, const ColumnSchema& schema) {
  return parse_dataset(csv::read_text_file(path, kModule), schema);
}

void write_dataset(std::ostream& out, std::span<const AnnotatedHeadline> dataset) {
  std::vector<std::string> fields = {"id", "date", "text"};
  for (Category c : kAllCategories) fields.emplace_back(name(c));
  csv::write_row(out, fields);
  for (const auto& h : dataset) {
    fields.clear();
    fields.push_back(h.id);
    fields.push_back(h.timestamp ? format_timestamp(*h.timestamp) : std::string());
    fields.push_back(h.text);
    for (Category c : kAllCategories) fields.emplace_back(h.labels[c] ? "1" : "0");
    csv::write_row(out, fields);
  }
}

DatasetSummary summarize(std::span<const AnnotatedHeadline> dataset) {
  DatasetSummary summary;
  for (const auto& h : dataset) {
    for (Category c : kAllCategories) {
      auto& count = summary.counts[index_of(c)];
      ++count.total;
      if (h.labels[c]) {
        ++count.true_count;
      } else {
        ++count.false_count;
      }
    }
  }
  return summary;
}

AnnotationSeries::AnnotationSeries(std::string annotator_id, std::map<std::string, LabelSet> labels)
    : annotator_id_(std::move(annotator_id)), labels_(std::move(labels)) {}

AnnotationSeries AnnotationSeries::from_dataset(std::string annotator_id,
                                                std::span<const AnnotatedHeadline> dataset) {
  std::map<std::string, LabelSet> labels;
  for (const auto& h : dataset) {
    if (!labels.emplace(h.id, h.labels).second) {
      throw InputError(std::string(kModule), "duplicate headline id '" + h.id + "' in series " + annotator_id);
    }
  }
  return AnnotationSeries(std::move(annotator_id), std::move(labels));
}

double cohen_kappa(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b) {
  if (a.size() != b.size()) throw InputError(std::string(kModule), "kappa series differ in length");
  if (a.empty()) throw InputError(std::string(kModule), "kappa of empty series");
  // Integer contingency counts keep the statistic exactly symmetric.
  long long agree = 0;
  long long a1 = 0;
  long long b1 = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > 1 || b[i] > 1) throw InputError(std::string(kModule), "kappa labels must be 0 or 1");
    agree += a[i] == b[i] ? 1 : 0;
    a1 += a[i];
    b1 += b[i];
  }
  const long long n = static_cast<long long>(a.size());
  const long long chance = a1 * b1 + (n - a1) * (n - b1);  // n^2 * p_e
  const long long total = n * n;
  if (chance == total) return agree == n ? 1.0 : 0.0;
  return static_cast<double>(n * agree - chance) / static_cast<double>(total - chance);
}

double cohen_kappa(const AnnotationSeries& a, const AnnotationSeries& b, Category category) {
  if (a.size() != b.size()) {
    throw InputError(std::string(kModule), "series " + a.annotator_id() + " and " + b.annotator_id() +
                                               " cover different headline ids");
  }
  std::vector<std::uint8_t> la;
  std::vector<std::uint8_t> lb;
  la.reserve(a.size());
  lb.reserve(b.size());
  auto ib = b.labels().begin();
  for (const auto& [id, labels] : a.labels()) {
    if (ib->first != id) {
      throw InputError(std::string(kModule), "series " + a.annotator_id() + " and " + b.annotator_id() +
                                                 " cover different headline ids");
    }
    la.push_back(labels[category] ? 1 : 0);
    lb.push_back(ib->second[category] ? 1 : 0);
    ++ib;
  }
  return cohen_kappa(la, lb);
}

std::vector<KappaEntry> pairwise_kappa(std::span<const AnnotationSeries> series) {
  std::vector<KappaEntry> out;
  for (std::size_t i = 0; i < series.size(); ++i) {
    for (std::size_t j = i + 1; j < series.size(); ++j) {
      for (Category c : kAllCategories) {
        out.push_back({series[i].annotator_id(), series[j].annotator_id(), c,
                       cohen_kappa(series[i], series[j], c)});
      }
    }
  }
  return out;
}

}  // namespace goldnews
