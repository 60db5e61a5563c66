// Prints one PASS / FAIL / SKIP line per acceptance criterion; exit status is
// nonzero when any criterion fails.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <functional>
#include <sstream>
#include <string>

#include "goldnews/causality.hpp"
#include "goldnews/classify.hpp"
#include "goldnews/corpus.hpp"
#include "goldnews/eval.hpp"
#include "goldnews/random.hpp"
#include "goldnews/signal.hpp"
#include "goldnews/textprep.hpp"
#include "goldnews/vectorize.hpp"
#include "kappa_cases.hpp"
#include "simulation.hpp"
#include "synthetic.hpp"
#include "tfidf_cases.hpp"

#ifdef GOLDNEWS_HAVE_APP
#include "goldnews/app/commands.hpp"
#include "goldnews/app/config.hpp"
#endif

using namespace goldnews;

namespace {

enum class Verdict { Pass, Fail, Skip };

struct Outcome {
  Verdict verdict;
  std::string detail;
};

Outcome pass(std::string d) { return {Verdict::Pass, std::move(d)}; }
Outcome fail(std::string d) { return {Verdict::Fail, std::move(d)}; }
Outcome verdict(bool ok, std::string d) { return {ok ? Verdict::Pass : Verdict::Fail, std::move(d)}; }

std::string fmt(const char* f, auto... args) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

struct HeldOut {
  std::array<Metrics, kCategoryCount> metrics{};
  double train_seconds = 0.0;
};

// Baseline pipeline: seeded 80/20 split, unigram TF-IDF fitted on train,
// default hyperparameters, F1 on the held-out part.
HeldOut held_out_f1(const std::vector<AnnotatedHeadline>& ds, int max_n, std::uint64_t seed) {
  const auto split = train_test_split(ds.size(), 0.8, seed);
  const auto cfg = PreprocessConfig::baseline();
  const auto t0 = std::chrono::steady_clock::now();
  std::vector<AnnotatedHeadline> train;
  std::vector<TokenSequence> docs;
  for (std::size_t i : split.train) {
    train.push_back(ds[i]);
    docs.push_back(preprocess(ds[i].text, cfg));
  }
  const auto bundle = train_bundle(train, cfg, fit_tfidf(docs, max_n));
  HeldOut out;
  out.train_seconds = seconds_since(t0);
  for (Category c : kAllCategories) {
    std::vector<std::uint8_t> pred;
    std::vector<std::uint8_t> gold;
    for (std::size_t i : split.test) {
      const auto p = bundle.classify(ds[i].text)[c];
      pred.push_back(p && p->label == 1);
      gold.push_back(ds[i].labels[c]);
    }
    out.metrics[index_of(c)] = evaluate(pred, gold);
  }
  return out;
}

Outcome conditional_reproduction() {
  const char* path = std::getenv("GOLDNEWS_DATASET");
  if (path == nullptr || *path == '\0') return {Verdict::Skip, "GOLDNEWS_DATASET not set"};
  const char* schema_path = std::getenv("GOLDNEWS_SCHEMA");
  const auto schema = schema_path && *schema_path ? load_schema(schema_path) : ColumnSchema::canonical();
  const auto ds = load_dataset(path, schema);
  const auto summary = summarize(ds);

  std::string detail = fmt("n=%zu", ds.size());
  bool ok = ds.size() == 11412;
  const auto count_ok = [&](Category c, std::size_t t, std::size_t f) {
    const auto& k = summary[c];
    detail += fmt(" %s=%zu/%zu", std::string(name(c)).c_str(), k.true_count, k.false_count);
    return k.true_count == t && k.false_count == f;
  };
  ok &= count_ok(Category::PriceOrNot, 9735, 1677);
  ok &= count_ok(Category::AssetComparison, 2150, 9262);

  const auto h = held_out_f1(ds, 1, 42);
  const std::pair<Category, double> targets[] = {
      {Category::PriceOrNot, 0.965},    {Category::PriceUp, 0.924},         {Category::PriceDown, 0.932},
      {Category::PastPriceInfo, 0.965}, {Category::AssetComparison, 0.994},
  };
  for (auto [c, target] : targets) {
    const double f1 = h.metrics[index_of(c)].f1;
    ok &= std::abs(f1 - target) <= 0.05;
    detail += fmt(" F1(%s)=%.3f", std::string(name(c)).c_str(), f1);
  }
  ok &= h.train_seconds < 60.0;
  detail += fmt(" train=%.2fs", h.train_seconds);
  return verdict(ok, detail);
}

Outcome synthetic_classification() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto ds = testkit::synthetic_headlines(2000, 2000);
  const auto h = held_out_f1(ds, 2, 42);
  const double elapsed = seconds_since(t0);
  double worst = 2.0;
  std::string worst_name;
  for (Category c : kAllCategories) {
    if (h.metrics[index_of(c)].f1 < worst) {
      worst = h.metrics[index_of(c)].f1;
      worst_name = name(c);
    }
  }
  return verdict(worst >= 0.95 && elapsed < 10.0,
                 fmt("min F1=%.4f (%s), elapsed=%.2fs", worst, worst_name.c_str(), elapsed));
}

double dense_diff(const TokenSequence& doc, const TfIdfModel& m) {
  std::vector<double> v(m.dimension(), 0.0);
  for (const auto& g : ngrams(doc, m.max_n())) {
    if (const auto i = m.vocabulary().index_of(g)) v[*i] += m.idf()[*i];
  }
  double n = 0.0;
  for (double x : v) n += x * x;
  n = std::sqrt(n);
  if (n > 0) {
    for (double& x : v) x /= n;
  }
  const auto got = transform_tfidf(doc, m).to_dense();
  double worst = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) worst = std::max(worst, std::abs(got[i] - v[i]));
  return worst;
}

Outcome oracle_equivalence() {
  double tfidf = 0.0;
  for (const auto& tc : testkit::tfidf_cases()) {
    const auto m = fit_tfidf(tc.corpus, tc.max_n);
    const auto got = transform_tfidf(tc.query, m).to_dense();
    for (std::size_t i = 0; i < got.size(); ++i) tfidf = std::max(tfidf, std::abs(got[i] - tc.dense[i]));
    for (std::size_t i = 0; i < tc.idf.size(); ++i) tfidf = std::max(tfidf, std::abs(m.idf()[i] - tc.idf[i]));
  }
  DeterministicRng rng(50);
  const std::vector<std::string> pool = {"gold", "up", "down", "NUM", "silver", "to", "oz", "rises", "falls"};
  std::size_t largest = 0;
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<TokenSequence> corpus(1 + rng.uniform_index(10));
    for (auto& d : corpus) {
      d.resize(1 + rng.uniform_index(8));
      for (auto& t : d) t = pool[rng.uniform_index(pool.size())];
    }
    const int max_n = 1 + static_cast<int>(rng.uniform_index(3));
    const auto m = fit_tfidf(corpus, max_n);
    if (m.dimension() > 50) continue;
    largest = std::max(largest, m.dimension());
    TokenSequence q(1 + rng.uniform_index(8));
    for (auto& t : q) t = pool[rng.uniform_index(pool.size())];
    tfidf = std::max(tfidf, dense_diff(q, m));
  }

  double kappa = 0.0;
  for (const auto& kc : testkit::kappa_cases()) kappa = std::max(kappa, std::abs(cohen_kappa(kc.a, kc.b) - kc.kappa));

  const double x[] = {-2.1, -1.3, -0.4, 0.0, 0.7, 1.1, 1.8, 2.5, 3.0, 3.6};
  const double y[] = {0.3, -1.4, 1.9, -0.2, 2.6, 0.1, 1.2, 3.9, 0.8, 2.7};
  std::vector<XYPoint> pts;
  for (int i = 0; i < 10; ++i) pts.push_back({x[i], y[i]});
  const auto r = ols_fit(pts);
  const double ols = std::max({std::abs(r.alpha - 0.7434596208199688780208962),
                               std::abs(r.beta - 0.5017307631236304741338245),
                               std::abs(r.se_beta - 0.243709611048334539939764),
                               std::abs(r.t_beta - 2.058723744892124952189085),
                               std::abs(r.p_beta - 0.07350556934926211296975209)});

  return verdict(tfidf < 1e-12 && kappa < 1e-12 && ols < 1e-9,
                 fmt("tfidf=%.2e (M<=%zu) kappa=%.2e ols=%.2e", tfidf, largest, kappa, ols));
}

Outcome numerical_checks() {
  const auto sg = testkit::check_subgradient(100, 314);
  DeterministicRng rng(2718);
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 3 + rng.uniform_index(500);
    std::vector<XYPoint> pts(n);
    for (auto& p : pts) {
      p.x = testkit::normal(rng) * 5.0;
      p.y = -2.0 + 0.4 * p.x + 3.0 * testkit::normal(rng);
    }
    const auto r = ols_fit(pts);
    double sr = 0.0;
    double srx = 0.0;
    for (const auto& p : pts) {
      const double e = p.y - r.alpha - r.beta * p.x;
      sr += e;
      srx += e * p.x;
    }
    worst = std::max(worst, std::max(std::abs(sr), std::abs(srx)) / (1e-8 * static_cast<double>(n)));
  }
  return verdict(sg.points == 100 && sg.max_relative_error < 1e-4 && worst < 1.0,
                 fmt("subgradient rel err=%.2e at %d points, residual/(1e-8 n)=%.3f", sg.max_relative_error,
                     sg.points, worst));
}

Outcome causality_calibration() {
  const auto power = testkit::rejection_rate(2.0, 250, 100, 0.01, 11);
  const auto size = testkit::rejection_rate(0.0, 250, 1000, 0.05, 12);
  return verdict(power.rejections >= 99 && size.rate() >= 0.03 && size.rate() <= 0.07,
                 fmt("beta=2: %d/100 at 0.01; beta=0: %.3f at 0.05", power.rejections, size.rate()));
}

Outcome directionality_properties() {
  DeterministicRng rng(10000);
  int bad = 0;
  int defined = 0;
  for (int trial = 0; trial < 10000; ++trial) {
    const auto u = static_cast<std::int64_t>(rng.uniform_index(1000));
    const auto c = static_cast<std::int64_t>(rng.uniform_index(1000));
    const auto d = static_cast<std::int64_t>(rng.uniform_index(1000));
    const auto s = directionality_score(u, c, d);
    if (u + c + d == 0) {
      bad += s.has_value();
      continue;
    }
    ++defined;
    const int sign = (*s > 0) - (*s < 0);
    const int expected = (u > d) - (u < d);
    const auto k = static_cast<std::int64_t>(1 + rng.uniform_index(100000));
    const auto scaled = directionality_score(k * u, k * c, k * d);
    if (*s < -1.0 || *s > 1.0 || sign != expected || !scaled || *scaled != *s) ++bad;
  }
  return verdict(bad == 0, fmt("%d violations over %d defined triples", bad, defined));
}

Outcome end_to_end_determinism() {
#ifdef GOLDNEWS_HAVE_APP
  testkit::TempDir dir("acceptance-e2e");
  const auto fx = testkit::write_pipeline_fixture(dir.path(), 60, 40.0, 2024);
  std::string outputs[2][2];
  bool regressed = true;
  for (int run = 0; run < 2; ++run) {
    auto cfg = app::load_config(fx.config);
    cfg.output_dir = dir.path() / ("run" + std::to_string(run));
    std::ostringstream log;
    app::cmd_train(cfg, log);
    app::cmd_classify(cfg.output("bundle.json"), fx.news, cfg.output("labeled.csv"), &cfg, log);
    app::cmd_score(cfg, cfg.output("labeled.csv"), cfg.output("scores.csv"), log);
    regressed &= app::cmd_causality(cfg, cfg.output("scores.csv"), cfg.output("causality.json"), log);
    outputs[run][0] = testkit::read_file(cfg.output("scores.csv"));
    outputs[run][1] = testkit::read_file(cfg.output("causality.json"));
  }
  const bool same = outputs[0][0] == outputs[1][0] && outputs[0][1] == outputs[1][1];
  return verdict(same && regressed && !outputs[0][0].empty(),
                 fmt("scores %zu bytes, regression %zu bytes, identical=%s", outputs[0][0].size(),
                     outputs[0][1].size(), same ? "yes" : "no"));
#else
  return {Verdict::Skip, "built without tools"};
#endif
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"conditional-reproduction", conditional_reproduction},
      {"synthetic-classification", synthetic_classification},
      {"oracle-equivalence", oracle_equivalence},
      {"numerical-checks", numerical_checks},
      {"causality-calibration", causality_calibration},
      {"directionality-properties", directionality_properties},
      {"end-to-end-determinism", end_to_end_determinism},
  };
  int failures = 0;
  for (const auto& [label, check] : criteria) {
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = fail(std::string("exception: ") + e.what());
    }
    const char* tag = o.verdict == Verdict::Pass ? "PASS" : o.verdict == Verdict::Fail ? "FAIL" : "SKIP";
    failures += o.verdict == Verdict::Fail;
    std::printf("%s %s: %s\n", tag, label, o.detail.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
