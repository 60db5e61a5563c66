#include "goldnews/eval.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "goldnews/csv.hpp"
#include "goldnews/error.hpp"

namespace goldnews {
namespace {

constexpr std::string_view kModule = "eval";

double ratio(std::size_t num, std::size_t den) {
  return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den);
}

std::string fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

}  // namespace

Metrics Metrics::from_counts(std::size_t tp, std::size_t fp, std::size_t fn, std::size_t tn) {
  Metrics m{tp, fp, fn, tn, 0.0, 0.0, 0.0};
  m.precision = ratio(tp, tp + fp);
  m.recall = ratio(tp, tp + fn);
  // 2tp / (2tp + fp + fn) is the harmonic mean without the 0/0 hazard.
  m.f1 = ratio(2 * tp, 2 * tp + fp + fn);
  return m;
}

Metrics evaluate(std::span<const std::uint8_t> pred, std::span<const std::uint8_t> gold) {
  if (pred.size() != gold.size()) {
    throw InputError(std::string(kModule), "prediction and gold lengths differ (" + std::to_string(pred.size()) +
                                               " vs " + std::to_string(gold.size()) + ")");
  }
  if (pred.empty()) throw InputError(std::string(kModule), "cannot evaluate an empty set");
  std::size_t tp = 0;
  std::size_t fp = 0;
  std::size_t fn = 0;
  std::size_t tn = 0;
  for (std::size_t i = 0; i < pred.size(); ++i) {
    if (pred[i] > 1 || gold[i] > 1) throw InputError(std::string(kModule), "labels must be 0 or 1");
    if (pred[i] && gold[i]) {
      ++tp;
    } else if (pred[i]) {
      ++fp;
    } else if (gold[i]) {
      ++fn;
    } else {
      ++tn;
    }
  }
  return Metrics::from_counts(tp, fp, fn, tn);
}

std::optional<double> percent_difference(double model_f1, double baseline_f1) {
  if (baseline_f1 == 0.0) return std::nullopt;
  return (model_f1 - baseline_f1) / baseline_f1 * 100.0;
}

ComparisonReport compare_report(std::span<const ModelMetrics> models, std::string_view baseline) {
  const auto base = std::find_if(models.begin(), models.end(), [&](const auto& m) { return m.model == baseline; });
  if (base == models.end()) {
    throw InputError(std::string(kModule), "baseline model '" + std::string(baseline) + "' not in report");
  }
  ComparisonReport report;
  report.baseline = std::string(baseline);
  for (Category c : kAllCategories) {
    const auto base_cell = base->categories.find(c);
    for (const auto& m : models) {
      const auto cell = m.categories.find(c);
      if (cell == m.categories.end()) continue;
      ReportRow row{c, m.model, cell->second, std::nullopt};
      if (base_cell != base->categories.end()) {
        row.pct_diff_vs_baseline = percent_difference(cell->second.f1, base_cell->second.f1);
      }
      report.rows.push_back(std::move(row));
    }
  }
  return report;
}

std::string ComparisonReport::to_csv() const {
  std::ostringstream out;
  out << "category,model,precision,recall,f1,pct_diff_vs_baseline\n";
  for (const auto& r : rows) {
    const std::vector<std::string> fields = {
        std::string(name(r.category)),
        r.model,
        fixed(r.metrics.precision, 6),
        fixed(r.metrics.recall, 6),
        fixed(r.metrics.f1, 6),
        r.pct_diff_vs_baseline ? fixed(*r.pct_diff_vs_baseline, 3) : std::string(kUndefinedMarker),
    };
    csv::write_row(out, fields);
  }
  return out.str();
}

std::string ComparisonReport::to_text() const {
  std::ostringstream out;
  std::size_t model_width = 5;
  for (const auto& r : rows) model_width = std::max(model_width, r.model.size());
  char line[256];
  std::snprintf(line, sizeof line, "%-18s %-*s %9s %9s %9s %10s\n", "category", static_cast<int>(model_width), "model",
                "precision", "recall", "f1", "vs_base_%");
  out << "positive-class metrics; baseline = " << baseline << '\n' << line;
  for (const auto& r : rows) {
    const std::string pct = r.pct_diff_vs_baseline ? fixed(*r.pct_diff_vs_baseline, 3) : std::string(kUndefinedMarker);
    std::snprintf(line, sizeof line, "%-18s %-*s %9.3f %9.3f %9.3f %10s\n", std::string(name(r.category)).c_str(),
                  static_cast<int>(model_width), r.model.c_str(), r.metrics.precision, r.metrics.recall, r.metrics.f1,
                  pct.c_str());
    out << line;
  }
  return out.str();
}

}  // namespace goldnews
