#include "goldnews/app/commands.hpp"

#include <chrono>
#include <ctime>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "goldnews/causality.hpp"
#include "goldnews/classify.hpp"
#include "goldnews/csv.hpp"
#include "goldnews/error.hpp"
#include "goldnews/eval.hpp"
#include "goldnews/signal.hpp"
#include "goldnews/vectorize.hpp"

namespace goldnews::app {
namespace {

using nlohmann::ordered_json;

constexpr std::string_view kModule = "cli";
constexpr std::string_view kModelName = "svm";

std::string utc_now() {
  const auto now = std::chrono::floor<std::chrono::seconds>(std::chrono::system_clock::now());
  const auto day = std::chrono::floor<std::chrono::days>(now);
  Timestamp ts{std::chrono::year_month_day{day}, now - day, std::chrono::minutes{0}};
  return format_timestamp(ts);
}

void ensure_output_dir(const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError(std::string(kModule), "cannot create '" + dir.string() + "': " + ec.message());
}

void write_output(const std::filesystem::path& path, std::string_view contents) {
  if (path.has_parent_path()) ensure_output_dir(path.parent_path());
  csv::write_text_file(path, contents, kModule);
}

std::vector<AnnotatedHeadline> load_config_dataset(const Config& config) {
  return load_dataset(require_file(config.dataset, "dataset"), config.schema);
}

std::vector<AnnotatedHeadline> select(const std::vector<AnnotatedHeadline>& ds, const std::vector<std::size_t>& idx) {
  std::vector<AnnotatedHeadline> out;
  out.reserve(idx.size());
  for (auto i : idx) out.push_back(ds[i]);
  return out;
}

struct SplitManifest {
  std::vector<std::string> train;
  std::vector<std::string> test;
};

std::string split_json(const Config& config, const std::vector<AnnotatedHeadline>& ds, const TrainTestSplit& split) {
  ordered_json doc;
  doc["seed"] = config.split_seed;
  doc["train_ratio"] = config.train_ratio;
  doc["n"] = ds.size();
  auto ids = [&](const std::vector<std::size_t>& idx) {
    ordered_json a = ordered_json::array();
    for (auto i : idx) a.push_back(ds[i].id);
    return a;
  };
  doc["train"] = ids(split.train);
  doc["test"] = ids(split.test);
  return doc.dump(2) + "\n";
}

SplitManifest load_split(const std::filesystem::path& path) {
  require_file(path, "split manifest");
  const auto text = csv::read_text_file(path, kModule);
  try {
    const auto doc = nlohmann::json::parse(text);
    return {doc.at("train").get<std::vector<std::string>>(), doc.at("test").get<std::vector<std::string>>()};
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string(kModule), "malformed split manifest '" + path.string() + "': " + e.what());
  }
}

}  // namespace

void cmd_train(const Config& config, std::ostream& log) {
  const auto dataset = load_config_dataset(config);
  if (dataset.size() < 2) throw InsufficientDataError(std::string(kModule), "dataset has fewer than 2 headlines");
  const auto split = train_test_split(dataset.size(), config.train_ratio, config.split_seed);
  const auto train = select(dataset, split.train);

  std::vector<TokenSequence> docs;
  docs.reserve(train.size());
  for (const auto& h : train) docs.push_back(preprocess(h.text, config.preprocess));
  auto tfidf = fit_tfidf(docs, config.max_n);

  std::optional<std::size_t> glove_words;
  if (config.glove) {
    require_file(config.glove, "glove table");
    glove_words = load_glove(*config.glove, config.glove_dim).size();
  }

  const auto start = std::chrono::steady_clock::now();
  const auto bundle = train_bundle(train, config.preprocess, std::move(tfidf), config.hyperparams);
  const auto elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  const auto bundle_path = config.output("bundle.json");
  write_output(bundle_path, bundle_to_json(bundle));
  write_output(config.output("split.json"), split_json(config, dataset, split));

  std::ostringstream tl;
  tl << "trained_at " << utc_now() << '\n';
  tl << "dataset " << config.dataset->string() << " headlines=" << dataset.size() << '\n';
  tl << "split seed=" << config.split_seed << " train=" << split.train.size() << " test=" << split.test.size()
     << '\n';
  tl << "preprocess fingerprint=" << bundle.preprocess_fingerprint() << '\n';
  tl << "tfidf max_n=" << bundle.tfidf().max_n() << " terms=" << bundle.tfidf().dimension() << '\n';
  if (glove_words) tl << "glove words=" << *glove_words << " dim=" << config.glove_dim << '\n';
  for (Category c : kAllCategories) {
    tl << name(c) << ' ';
    if (const auto* m = bundle.model(c)) {
      tl << "positives=" << m->metadata.positives << "/" << m->metadata.samples
         << " lambda=" << csv::format_real(m->hyperparams.lambda) << " epochs=" << m->hyperparams.epochs
         << " seed=" << m->hyperparams.seed << '\n';
    } else {
      tl << "FAILED " << bundle.failures().at(c) << '\n';
    }
  }
  tl << "training_seconds " << elapsed << '\n';
  write_output(config.output("train.log"), tl.str());

  log << "trained " << (kCategoryCount - bundle.failures().size()) << "/" << kCategoryCount << " classifiers on "
      << train.size() << " headlines\n";
  for (const auto& [c, why] : bundle.failures()) log << "warning: " << name(c) << " not trained: " << why << '\n';
  log << "wrote " << bundle_path.string() << '\n';
}

void cmd_eval(const Config& config, const std::optional<std::filesystem::path>& bundle_path, std::ostream& log) {
  const auto path = bundle_path.value_or(config.output("bundle.json"));
  require_file(path, "bundle");
  const auto bundle = load_bundle(path);
  bundle.check_fingerprint(config.preprocess);

  const auto dataset = load_config_dataset(config);
  const auto manifest = load_split(config.output("split.json"));
  std::map<std::string, std::size_t> by_id;
  for (std::size_t i = 0; i < dataset.size(); ++i) by_id.emplace(dataset[i].id, i);
  std::vector<std::size_t> test;
  for (const auto& id : manifest.test) {
    const auto it = by_id.find(id);
    if (it == by_id.end()) {
      throw InputError(std::string(kModule), "split manifest id '" + id + "' is not in the dataset");
    }
    test.push_back(it->second);
  }
  if (test.empty()) throw InsufficientDataError(std::string(kModule), "test split is empty");

  std::vector<LabelPredictions> preds;
  preds.reserve(test.size());
  for (auto i : test) preds.push_back(bundle.classify(dataset[i].text));

  ModelMetrics mm{std::string(kModelName), {}};
  for (Category c : kAllCategories) {
    if (!bundle.model(c)) continue;
    std::vector<std::uint8_t> p;
    std::vector<std::uint8_t> g;
    for (std::size_t k = 0; k < test.size(); ++k) {
      p.push_back(preds[k][c]->label == 1 ? 1 : 0);
      g.push_back(dataset[test[k]].labels[c] ? 1 : 0);
    }
    mm.categories.emplace(c, evaluate(p, g));
  }
  const std::vector<ModelMetrics> models = {mm};
  const auto report = compare_report(models, kModelName);
  write_output(config.output("eval_report.csv"), report.to_csv());
  write_output(config.output("eval_report.txt"), report.to_text());
  log << report.to_text();
}

void cmd_classify(const std::filesystem::path& bundle_path, const std::filesystem::path& input,
                  const std::optional<std::filesystem::path>& output, const Config* config, std::ostream& out) {
  require_file(bundle_path, "bundle");
  const auto bundle = load_bundle(bundle_path);
  if (config) bundle.check_fingerprint(config->preprocess);

  const auto table = csv::read_file(input, kModule);
  const auto text_col = table.column("text");
  if (!table.header.empty() && !text_col) {
    throw SchemaError(std::string(kModule), "input has no 'text' column", "text");
  }
  const auto id_col = table.column("id");
  const auto date_col = table.column("date");

  std::ostringstream csv_out;
  std::vector<std::string> header = {"id", "date"};
  for (Category c : kAllCategories) header.emplace_back(name(c));
  for (Category c : kAllCategories) header.push_back("margin_" + std::string(name(c)));
  csv::write_row(csv_out, header);

  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    const auto& row = table.rows[r];
    const auto preds = bundle.classify(row[*text_col]);
    std::vector<std::string> fields;
    fields.push_back(id_col ? row[*id_col] : std::to_string(r));
    fields.push_back(date_col ? row[*date_col] : std::string());
    for (Category c : kAllCategories) fields.emplace_back(preds[c] ? (preds[c]->label == 1 ? "1" : "0") : "");
    for (Category c : kAllCategories) fields.push_back(preds[c] ? csv::format_real(preds[c]->margin) : "");
    csv::write_row(csv_out, fields);
  }
  if (output) {
    write_output(*output, csv_out.str());
    out << "classified " << table.rows.size() << " headlines -> " << output->string() << '\n';
  } else {
    out << csv_out.str();
  }
}

void cmd_agreement(const std::vector<std::filesystem::path>& annotations, const ColumnSchema& schema,
                   const std::optional<std::filesystem::path>& output, std::ostream& out) {
  if (annotations.size() < 2) throw InputError(std::string(kModule), "agreement needs at least two annotation files");
  std::vector<AnnotationSeries> series;
  for (const auto& path : annotations) {
    series.push_back(AnnotationSeries::from_dataset(path.stem().string(), load_dataset(path, schema)));
  }
  std::ostringstream csv_out;
  csv_out << "annotator_a,annotator_b,category,kappa\n";
  for (const auto& e : pairwise_kappa(series)) {
    const std::vector<std::string> fields = {e.annotator_a, e.annotator_b, std::string(name(e.category)),
                                             csv::format_real(e.kappa)};
    csv::write_row(csv_out, fields);
  }
  if (output) {
    write_output(*output, csv_out.str());
    out << "wrote " << output->string() << '\n';
  } else {
    out << csv_out.str();
  }
}

void cmd_score(const Config& config, const std::filesystem::path& labeled, const std::filesystem::path& output,
               std::ostream& log) {
  const auto prices = load_prices(require_file(config.prices, "price series"));
  const auto items = load_labeled_news(labeled);
  const auto calendar = prices.calendar();
  const auto series = aggregate_daily(items, config.window, calendar);
  write_output(output, scores_csv(series));
  log << "scored " << series.days.size() << " trading days from " << series.n_assigned << " headlines ("
      << series.n_dropped << " outside every window) -> " << output.string() << '\n';
}

bool cmd_causality(const Config& config, const std::filesystem::path& scores, const std::filesystem::path& output,
                   std::ostream& log) {
  const auto prices = load_prices(require_file(config.prices, "price series"));
  const auto series = load_scores_csv(scores);
  const auto results = causality_test(series.days, prices, config.periods);
  write_output(output, causality_report_json(results));
  bool any = false;
  for (const auto& r : results) {
    log << r.period.name << ": ";
    if (r.regression) {
      any = true;
      const auto& g = *r.regression;
      log << "n=" << g.n << " beta=" << csv::format_real(g.beta) << " p=" << csv::format_real(g.p_beta);
      if (g.reject_null_at) {
        log << " reject H0 at " << csv::format_real(*g.reject_null_at);
      } else {
        log << " H0 not rejected";
      }
      log << '\n';
    } else {
      log << r.status << " (" << r.error << ")\n";
    }
  }
  log << "wrote " << output.string() << '\n';
  return any;
}

int report_error(std::ostream& err) {
  try {
    throw;
  } catch (const InsufficientDataError& e) {
    err << "goldnews: " << e.what() << '\n';
    return kExitInsufficient;
  } catch (const DegenerateRegressorError& e) {
    err << "goldnews: " << e.what() << '\n';
    return kExitInsufficient;
  } catch (const Error& e) {
    err << "goldnews: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    err << "goldnews: " << kModule << ": " << e.what() << '\n';
    return kExitInput;
  }
}

}  // namespace goldnews::app
