#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "goldnews/category.hpp"

namespace goldnews {

// Positive-class confusion counts. Every 0/0 ratio is reported as 0.
struct Metrics {
  std::size_t tp = 0;
  std::size_t fp = 0;
  std::size_t fn = 0;
  std::size_t tn = 0;
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;

  std::size_t total() const { return tp + fp + fn + tn; }
  static Metrics from_counts(std::size_t tp, std::size_t fp, std::size_t fn, std::size_t tn);
};

// Labels are 0/1. Throws InputError on a length mismatch, empty input or a
// label outside {0, 1}.
Metrics evaluate(std::span<const std::uint8_t> pred, std::span<const std::uint8_t> gold);

struct ModelMetrics {
  std::string model;
  std::map<Category, Metrics> categories;
};

// (model - baseline) / baseline * 100; empty when the baseline is 0.
std::optional<double> percent_difference(double model_f1, double baseline_f1);

struct ReportRow {
  Category category;
  std::string model;
  Metrics metrics;
  std::optional<double> pct_diff_vs_baseline;
};

struct ComparisonReport {
  std::string baseline;
  std::vector<ReportRow> rows;  // category-major, models in input order

  // category,model,precision,recall,f1,pct_diff_vs_baseline
  std::string to_csv() const;
  std::string to_text() const;
};

inline constexpr std::string_view kUndefinedMarker = "NA";

// Throws InputError when no model is named `baseline`.
ComparisonReport compare_report(std::span<const ModelMetrics> models, std::string_view baseline);

}  // namespace goldnews
