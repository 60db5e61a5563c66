#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "goldnews/signal.hpp"
#include "goldnews/timestamp.hpp"

namespace goldnews {

struct PricePoint {
  Date day{};
  double price = 0.0;
};

// Daily closing prices; days strictly increasing, prices positive. The
// series doubles as the trading calendar.
class PriceSeries {
 public:
  PriceSeries() = default;
  // Throws InputError when an invariant is violated.
  explicit PriceSeries(std::vector<PricePoint> points);

  std::span<const PricePoint> points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  std::vector<Date> calendar() const;

 private:
  std::vector<PricePoint> points_;
};

// date,price CSV.
PriceSeries parse_prices(std::string_view csv_text);
PriceSeries load_prices(const std::filesystem::path& path);

struct XYPoint {
  double x = 0.0;
  double y = 0.0;
};

// One usable day N: x = S(N-1) - S(N-2), y = P(N) - P(N-1).
struct Observation {
  Date day{};
  double score_change = 0.0;
  double price_change = 0.0;
};

struct PairSet {
  std::vector<Observation> pairs;
  // Days N (from the third trading day on) lacking a defined S(N-1) or S(N-2).
  std::vector<Date> skipped_days;

  std::size_t dropped() const { return skipped_days.size(); }
  std::vector<XYPoint> xy() const;
};

// Trading days come from the price series; scores are matched by date.
// Throws InsufficientDataError when fewer than min_pairs pairs survive.
PairSet build_pairs(std::span<const DailyScore> scores, const PriceSeries& prices, std::size_t min_pairs = 3);

struct RegressionResult {
  double alpha = 0.0;
  double beta = 0.0;
  double se_alpha = 0.0;
  double se_beta = 0.0;
  double t_beta = 0.0;
  double p_beta = 1.0;  // two-sided, Student t with n - 2 dof
  double r_squared = 0.0;
  double rss = 0.0;
  std::size_t n = 0;
  // Zero residuals: standard errors are 0 and t is unbounded. p is 0 when
  // beta != 0 and 1 when y is constant.
  bool exact_fit = false;
  // Smallest of {0.01, 0.05} with p < level.
  std::optional<double> reject_null_at;
};

inline constexpr double kSignificanceLevels[] = {0.01, 0.05};

// Closed-form simple regression y = alpha + beta x. Throws
// InsufficientDataError for n < 3 and DegenerateRegressorError for constant x.
RegressionResult ols_fit(std::span<const XYPoint> points);

struct AnalysisPeriod {
  std::string name;
  Date start{};
  Date end{};  // inclusive
};

// April-March years 2017/18 and 2018/19.
std::vector<AnalysisPeriod> default_periods();

struct PeriodResult {
  AnalysisPeriod period;
  std::optional<RegressionResult> regression;
  std::size_t dropped_pairs = 0;
  // "ok", "insufficient_data" or "degenerate_regressor".
  std::string status = "ok";
  std::string error;
};

inline constexpr std::string_view kNullHypothesis =
    "beta = 0: the lagged change in directionality score carries no information about the next price change";
inline constexpr std::string_view kAlternativeHypothesis =
    "beta != 0: the lagged change in directionality score is related to the next price change";

// A pair belongs to the period containing its day N. Periods must not
// overlap (InputError); a period without enough pairs reports its error and
// the others still run.
std::vector<PeriodResult> causality_test(std::span<const DailyScore> scores, const PriceSeries& prices,
                                         std::span<const AnalysisPeriod> periods);

// {hypotheses: {H0, HA}, periods: [{name, start, end, status, n, alpha, beta,
// se_alpha, se_beta, t, p, r_squared, exact_fit, reject_at, dropped_pairs}]}
std::string causality_report_json(std::span<const PeriodResult> results);

}  // namespace goldnews
