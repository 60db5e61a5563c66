#include "goldnews/causality.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include <json.hpp>

#include "goldnews/csv.hpp"
#include "goldnews/error.hpp"
#include "goldnews/special_functions.hpp"

namespace goldnews {
namespace {

constexpr std::string_view kModule = "causality";

using std::chrono::sys_days;

bool within(const Date& d, const AnalysisPeriod& p) {
  return sys_days{p.start} <= sys_days{d} && sys_days{d} <= sys_days{p.end};
}

}  // namespace

PriceSeries::PriceSeries(std::vector<PricePoint> points) : points_(std::move(points)) {
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (!points_[i].day.ok()) throw InputError(std::string(kModule), "invalid price date");
    if (!(points_[i].price > 0.0) || !std::isfinite(points_[i].price)) {
      throw InputError(std::string(kModule), "price on " + format_date(points_[i].day) + " must be positive");
    }
    if (i > 0 && !(sys_days{points_[i - 1].day} < sys_days{points_[i].day})) {
      throw InputError(std::string(kModule), "price dates must be strictly increasing (at " +
                                                 format_date(points_[i].day) + ")");
    }
  }
}

std::vector<Date> PriceSeries::calendar() const {
  std::vector<Date> days;
  days.reserve(points_.size());
  for (const auto& p : points_) days.push_back(p.day);
  return days;
}

PriceSeries parse_prices(std::string_view csv_text) {
  const csv::Table table = csv::parse(csv_text);
  if (table.header.empty()) return PriceSeries{};
  const auto c_date = table.column("date");
  const auto c_price = table.column("price");
  if (!c_date) throw SchemaError(std::string(kModule), "missing column 'date'", "date");
  if (!c_price) throw SchemaError(std::string(kModule), "missing column 'price'", "price");
  std::vector<PricePoint> points;
  points.reserve(table.rows.size());
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    PricePoint p;
    try {
      p.day = parse_date(table.rows[r][*c_date]);
    } catch (const InputError& e) {
      throw ValidationError(std::string(kModule), e.message(), r + 1);
    }
    const auto price = csv::parse_real(table.rows[r][*c_price]);
    if (!price) throw ValidationError(std::string(kModule), "price is not a number", r + 1);
    p.price = *price;
    points.push_back(p);
  }
  return PriceSeries(std::move(points));
}

PriceSeries load_prices(const std::filesystem::path& path) { return parse_prices(csv::read_text_file(path, kModule)); }

std::vector<XYPoint> PairSet::xy() const {
  std::vector<XYPoint> out;
  out.reserve(pairs.size());
  for (const auto& p : pairs) out.push_back({p.score_change, p.price_change});
  return out;
}

PairSet build_pairs(std::span<const DailyScore> scores, const PriceSeries& prices, std::size_t min_pairs) {
  std::map<sys_days, std::optional<double>> by_day;
  for (const auto& s : scores) by_day[sys_days{s.day}] = s.score;
  auto score_on = [&](const Date& d) -> std::optional<double> {
    const auto it = by_day.find(sys_days{d});
    return it == by_day.end() ? std::nullopt : it->second;
  };
  const auto pts = prices.points();
  PairSet set;
  for (std::size_t k = 2; k < pts.size(); ++k) {
    const auto s1 = score_on(pts[k - 1].day);
    const auto s2 = score_on(pts[k - 2].day);
    if (!s1 || !s2) {
      set.skipped_days.push_back(pts[k].day);
      continue;
    }
    set.pairs.push_back({pts[k].day, *s1 - *s2, pts[k].price - pts[k - 1].price});
  }
  if (set.pairs.size() < min_pairs) {
    throw InsufficientDataError(std::string(kModule), "only " + std::to_string(set.pairs.size()) +
                                                          " usable pairs, need " + std::to_string(min_pairs));
  }
  return set;
}

RegressionResult ols_fit(std::span<const XYPoint> points) {
  const std::size_t n = points.size();
  if (n < 3) {
    throw InsufficientDataError(std::string(kModule), "regression needs at least 3 points, got " + std::to_string(n));
  }
  const double dn = static_cast<double>(n);
  double mx = 0.0;
  double my = 0.0;
  for (const auto& p : points) {
    mx += p.x;
    my += p.y;
  }
  mx /= dn;
  my /= dn;
  double sxx = 0.0;
  double sxy = 0.0;
  double syy = 0.0;
  for (const auto& p : points) {
    const double dx = p.x - mx;
    const double dy = p.y - my;
    sxx += dx * dx;
    sxy += dx * dy;
    syy += dy * dy;
  }
  if (!(sxx > 0.0)) throw DegenerateRegressorError(std::string(kModule), "regressor is constant");

  const bool y_constant =
      std::all_of(points.begin(), points.end(), [&](const XYPoint& p) { return p.y == points.front().y; });

  RegressionResult r;
  r.n = n;
  if (y_constant) {
    r.beta = 0.0;
    r.alpha = points.front().y;
    syy = 0.0;
  } else {
    r.beta = sxy / sxx;
    r.alpha = my - r.beta * mx;
  }
  for (const auto& p : points) {
    const double e = p.y - r.alpha - r.beta * p.x;
    r.rss += e * e;
  }
  r.r_squared = syy > 0.0 ? std::clamp(1.0 - r.rss / syy, 0.0, 1.0) : 0.0;

  // Residuals at rounding level relative to the spread of y count as zero.
  r.exact_fit = r.rss <= 1e-24 * syy || syy == 0.0;
  if (r.exact_fit) {
    r.se_alpha = 0.0;
    r.se_beta = 0.0;
    if (r.beta == 0.0) {
      r.t_beta = 0.0;
      r.p_beta = 1.0;
    } else {
      r.t_beta = std::copysign(std::numeric_limits<double>::infinity(), r.beta);
      r.p_beta = 0.0;
    }
  } else {
    const double sigma2 = r.rss / (dn - 2.0);
    r.se_beta = std::sqrt(sigma2 / sxx);
    r.se_alpha = std::sqrt(sigma2 * (1.0 / dn + mx * mx / sxx));
    r.t_beta = r.beta / r.se_beta;
    r.p_beta = stats::student_t_two_sided_p(r.t_beta, dn - 2.0);
  }
  for (double level : kSignificanceLevels) {
    if (r.p_beta < level) {
      r.reject_null_at = level;
      break;
    }
  }
  return r;
}

std::vector<AnalysisPeriod> default_periods() {
  using namespace std::chrono;
  return {
      {"2017-04..2018-03", year{2017} / April / 1, year{2018} / March / 31},
      {"2018-04..2019-03", year{2018} / April / 1, year{2019} / March / 31},
  };
}

std::vector<PeriodResult> causality_test(std::span<const DailyScore> scores, const PriceSeries& prices,
                                         std::span<const AnalysisPeriod> periods) {
  std::vector<const AnalysisPeriod*> sorted;
  for (const auto& p : periods) {
    if (!p.start.ok() || !p.end.ok() || sys_days{p.end} < sys_days{p.start}) {
      throw InputError(std::string(kModule), "period '" + p.name + "' has an invalid date range");
    }
    sorted.push_back(&p);
  }
  std::sort(sorted.begin(), sorted.end(),
            [](const auto* a, const auto* b) { return sys_days{a->start} < sys_days{b->start}; });
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    if (!(sys_days{sorted[i - 1]->end} < sys_days{sorted[i]->start})) {
      throw InputError(std::string(kModule),
                       "periods '" + sorted[i - 1]->name + "' and '" + sorted[i]->name + "' overlap");
    }
  }

  const PairSet all = build_pairs(scores, prices, 0);
  std::vector<PeriodResult> results;
  for (const auto& period : periods) {
    PeriodResult res;
    res.period = period;
    std::vector<XYPoint> xy;
    for (const auto& obs : all.pairs) {
      if (within(obs.day, period)) xy.push_back({obs.score_change, obs.price_change});
    }
    res.dropped_pairs = static_cast<std::size_t>(std::count_if(
        all.skipped_days.begin(), all.skipped_days.end(), [&](const Date& d) { return within(d, period); }));
    try {
      if (xy.size() < 3) {
        throw InsufficientDataError(std::string(kModule),
                                    "only " + std::to_string(xy.size()) + " usable pairs, need 3");
      }
      res.regression = ols_fit(xy);
    } catch (const InsufficientDataError& e) {
      res.status = "insufficient_data";
      res.error = e.message();
    } catch (const DegenerateRegressorError& e) {
      res.status = "degenerate_regressor";
      res.error = e.message();
    }
    results.push_back(std::move(res));
  }
  return results;
}

std::string causality_report_json(std::span<const PeriodResult> results) {
  nlohmann::ordered_json periods = nlohmann::ordered_json::array();
  for (const auto& r : results) {
    nlohmann::ordered_json p;
    p["name"] = r.period.name;
    p["start"] = format_date(r.period.start);
    p["end"] = format_date(r.period.end);
    p["status"] = r.status;
    if (r.regression) {
      const auto& g = *r.regression;
      p["n"] = g.n;
      p["alpha"] = g.alpha;
      p["beta"] = g.beta;
      p["se_alpha"] = g.se_alpha;
      p["se_beta"] = g.se_beta;
      // Non-finite t (exact fit) serializes as null.
      p["t"] = std::isfinite(g.t_beta) ? nlohmann::ordered_json(g.t_beta) : nlohmann::ordered_json(nullptr);
      p["p"] = g.p_beta;
      p["r_squared"] = g.r_squared;
      p["exact_fit"] = g.exact_fit;
      p["reject_at"] = g.reject_null_at ? nlohmann::ordered_json(*g.reject_null_at) : nlohmann::ordered_json(nullptr);
    } else {
      p["error"] = r.error;
    }
    p["dropped_pairs"] = r.dropped_pairs;
    periods.push_back(std::move(p));
  }
  nlohmann::ordered_json doc;
  doc["model"] = "price_change[N] = alpha + beta * (score[N-1] - score[N-2]) + error";
  doc["hypotheses"] = {{"H0", std::string(kNullHypothesis)}, {"HA", std::string(kAlternativeHypothesis)}};
  doc["periods"] = std::move(periods);
  return doc.dump(2) + "\n";
}

}  // namespace goldnews
