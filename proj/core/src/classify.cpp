#include "goldnews/classify.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <numeric>
#include <set>

#include <json.hpp>

#include "goldnews/csv.hpp"
#include "goldnews/error.hpp"
#include "goldnews/random.hpp"

namespace goldnews {
namespace {

constexpr std::string_view kModule = "classify";

void check_training_inputs(std::span<const SparseVector> x, std::span<const int> y) {
  if (x.size() != y.size()) {
    throw InputError(std::string(kModule), "got " + std::to_string(x.size()) + " vectors but " +
                                               std::to_string(y.size()) + " labels");
  }
  if (x.size() < 2) throw InputError(std::string(kModule), "need at least two training samples");
  const std::size_t dim = x.front().dimension();
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].dimension() != dim) {
      throw InputError(std::string(kModule), "sample " + std::to_string(i) + " has dimension " +
                                                 std::to_string(x[i].dimension()) + ", expected " +
                                                 std::to_string(dim));
    }
    if (y[i] != 1 && y[i] != -1) throw InputError(std::string(kModule), "labels must be -1 or +1");
  }
}

}  // namespace

void SvmHyperparams::validate() const {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) {
    throw InputError(std::string(kModule), "lambda must be a positive finite number");
  }
  if (epochs < 1) throw InputError(std::string(kModule), "epochs must be at least 1");
}

Prediction predict(const LinearSvmModel& model, const SparseVector& x) {
  const double margin = x.dot(model.weights) + model.bias;
  return {margin >= 0.0 ? 1 : -1, margin};
}

double hinge_objective(std::span<const double> weights, double bias, std::span<const SparseVector> x,
                       std::span<const int> y, double lambda) {
  double reg = 0.0;
  for (double w : weights) reg += w * w;
  double loss = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    loss += std::max(0.0, 1.0 - y[i] * (x[i].dot(weights) + bias));
  }
  return 0.5 * lambda * reg + loss / static_cast<double>(x.size());
}

Subgradient hinge_subgradient(std::span<const double> weights, double bias, std::span<const SparseVector> x,
                              std::span<const int> y, double lambda) {
  Subgradient g;
  g.weights.resize(weights.size());
  for (std::size_t j = 0; j < weights.size(); ++j) g.weights[j] = lambda * weights[j];
  const double inv_n = 1.0 / static_cast<double>(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (y[i] * (x[i].dot(weights) + bias) < 1.0) {
      const auto idx = x[i].indices();
      const auto val = x[i].values();
      for (std::size_t k = 0; k < idx.size(); ++k) g.weights[idx[k]] -= inv_n * y[i] * val[k];
      g.bias -= inv_n * y[i];
    }
  }
  return g;
}

LinearSvmModel train_svm(std::span<const SparseVector> x, std::span<const int> y, const SvmHyperparams& hp,
                         TrainingTrace* trace) {
  hp.validate();
  check_training_inputs(x, y);
  const auto positives = static_cast<std::size_t>(std::count(y.begin(), y.end(), 1));
  if (positives == 0 || positives == y.size()) {
    throw TrainingError(std::string(kModule), "training labels contain a single class");
  }

  const std::size_t n = x.size();
  const std::size_t dim = x.front().dimension();
  // w = scale * v keeps the per-step shrink O(1).
  std::vector<double> v(dim, 0.0);
  double scale = 1.0;
  double bias = 0.0;
  std::vector<std::uint32_t> order(n);
  std::iota(order.begin(), order.end(), 0U);
  DeterministicRng rng(hp.seed);

  auto materialize = [&] {
    std::vector<double> w(v);
    for (double& e : w) e *= scale;
    return w;
  };

  if (trace) {
    trace->epoch_objective.clear();
    trace->margin_violations.clear();
    trace->decisions.clear();
    trace->sample_order.clear();
    trace->margin_violations.reserve(n * static_cast<std::size_t>(hp.epochs));
    trace->sample_order.reserve(n * static_cast<std::size_t>(hp.epochs));
  }

  std::uint64_t t = 0;
  for (int epoch = 0; epoch < hp.epochs; ++epoch) {
    rng.shuffle(std::span<std::uint32_t>(order));
    for (const std::uint32_t i : order) {
      ++t;
      const double eta = 1.0 / (hp.lambda * static_cast<double>(t));
      const double margin = scale * x[i].dot(v) + bias;
      const bool violated = y[i] * margin < 1.0;
      // 1 - eta * lambda, written so that the first step is exactly zero.
      const double shrink = static_cast<double>(t - 1) / static_cast<double>(t);
      if (shrink == 0.0) {
        std::fill(v.begin(), v.end(), 0.0);
        scale = 1.0;
      } else {
        scale *= shrink;
      }
      if (violated) {
        const double step = eta * y[i] / scale;
        const auto idx = x[i].indices();
        const auto val = x[i].values();
        for (std::size_t k = 0; k < idx.size(); ++k) v[idx[k]] += step * val[k];
        // Unregularized bias: damped step 1 / (1 + lambda t).
        bias += y[i] / (1.0 + hp.lambda * static_cast<double>(t));
      }
      if (scale < 1e-9) {
        for (double& e : v) e *= scale;
        scale = 1.0;
      }
      if (trace) {
        trace->margin_violations.push_back(violated ? 1 : 0);
        trace->decisions.push_back(margin >= 0.0 ? 1 : -1);
        trace->sample_order.push_back(i);
      }
    }
    if (trace) {
      const auto w = materialize();
      trace->epoch_objective.push_back(hinge_objective(w, bias, x, y, hp.lambda));
    }
  }

  LinearSvmModel model;
  model.weights = materialize();
  model.bias = bias;
  model.hyperparams = hp;
  model.metadata = {n, positives};
  return model;
}

TrainTestSplit train_test_split(std::size_t n, double train_ratio, std::uint64_t seed) {
  if (!(train_ratio > 0.0 && train_ratio < 1.0)) {
    throw InputError(std::string(kModule), "train ratio must lie in (0, 1)");
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  DeterministicRng rng(seed);
  rng.shuffle(std::span<std::size_t>(order));
  const auto n_train = static_cast<std::size_t>(std::llround(static_cast<double>(n) * train_ratio));
  TrainTestSplit split;
  split.train.assign(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(n_train));
  split.test.assign(order.begin() + static_cast<std::ptrdiff_t>(n_train), order.end());
  std::sort(split.train.begin(), split.train.end());
  std::sort(split.test.begin(), split.test.end());
  return split;
}

ClassifierBundle::ClassifierBundle(PreprocessConfig preprocess, TfIdfModel tfidf,
                                   std::array<std::optional<LinearSvmModel>, kCategoryCount> models,
                                   std::map<Category, std::string> failures)
    : preprocess_(std::move(preprocess)),
      fingerprint_(preprocess_.fingerprint()),
      tfidf_(std::move(tfidf)),
      models_(std::move(models)),
      failures_(std::move(failures)) {
  for (Category c : kAllCategories) {
    const auto& m = models_[index_of(c)];
    if (m && m->dimension() != tfidf_.dimension()) {
      throw InputError(std::string(kModule), "model for " + std::string(name(c)) + " has dimension " +
                                                 std::to_string(m->dimension()) + " but vocabulary has " +
                                                 std::to_string(tfidf_.dimension()));
    }
    if (!m && !failures_.contains(c)) {
      failures_.emplace(c, "no model");
    }
  }
}

const LinearSvmModel* ClassifierBundle::model(Category c) const {
  const auto& m = models_[index_of(c)];
  return m ? &*m : nullptr;
}

void ClassifierBundle::check_fingerprint(const PreprocessConfig& config) const {
  const std::string other = config.fingerprint();
  if (other != fingerprint_) {
    throw FingerprintMismatchError(std::string(kModule), "preprocessing fingerprint " + other +
                                                             " does not match bundle fingerprint " + fingerprint_);
  }
}

LabelPredictions ClassifierBundle::classify_vector(const SparseVector& x) const {
  LabelPredictions out;
  for (Category c : kAllCategories) {
    if (const auto* m = model(c)) out.by_category[index_of(c)] = predict(*m, x);
  }
  return out;
}

LabelPredictions ClassifierBundle::classify(std::string_view text) const {
  return classify_vector(tfidf_.transform(preprocess(text, preprocess_)));
}

LabelPredictions ClassifierBundle::classify(std::string_view text, const PreprocessConfig& config) const {
  check_fingerprint(config);
  return classify(text);
}

ClassifierBundle train_bundle(std::span<const AnnotatedHeadline> dataset, const PreprocessConfig& preprocess_config,
                              TfIdfModel tfidf, const CategoryHyperparams& hp) {
  std::vector<SparseVector> x;
  x.reserve(dataset.size());
  for (const auto& h : dataset) x.push_back(tfidf.transform(preprocess(h.text, preprocess_config)));

  std::array<std::future<LinearSvmModel>, kCategoryCount> jobs;
  for (Category c : kAllCategories) {
    std::vector<int> y;
    y.reserve(dataset.size());
    for (const auto& h : dataset) y.push_back(h.labels[c] ? 1 : -1);
    jobs[index_of(c)] = std::async(std::launch::async, [&x, y = std::move(y), params = hp[index_of(c)], c] {
      LinearSvmModel m = train_svm(x, y, params);
      m.category = c;
      return m;
    });
  }

  std::array<std::optional<LinearSvmModel>, kCategoryCount> models;
  std::map<Category, std::string> failures;
  for (Category c : kAllCategories) {
    try {
      models[index_of(c)] = jobs[index_of(c)].get();
    } catch (const Error& e) {
      failures.emplace(c, e.message());
    }
  }
  return ClassifierBundle(preprocess_config, std::move(tfidf), std::move(models), std::move(failures));
}

std::string bundle_to_json(const ClassifierBundle& bundle) {
  nlohmann::json models = nlohmann::json::array();
  for (Category c : kAllCategories) {
    const auto* m = bundle.model(c);
    if (!m) continue;
    models.push_back({
        {"category", name(c)},
        {"bias", m->bias},
        {"weights", m->weights},
        {"hyperparams", {{"lambda", m->hyperparams.lambda}, {"epochs", m->hyperparams.epochs}, {"seed", m->hyperparams.seed}}},
        {"metadata", {{"samples", m->metadata.samples}, {"positives", m->metadata.positives}}},
    });
  }
  nlohmann::json failures = nlohmann::json::array();
  for (const auto& [c, reason] : bundle.failures()) failures.push_back({{"category", name(c)}, {"reason", reason}});
  const auto& pc = bundle.preprocess_config();
  const nlohmann::json doc = {
      {"format", "goldnews-classifier-bundle"},
      {"version", ClassifierBundle::kFormatVersion},
      {"preprocess_fingerprint", bundle.preprocess_fingerprint()},
      {"preprocess", {{"filter_stopwords", pc.filter_stopwords}, {"stopwords", pc.stopwords}, {"preserve", pc.preserve}}},
      {"tfidf", nlohmann::json::parse(bundle.tfidf().to_json())},
      {"models", std::move(models)},
      {"failures", std::move(failures)},
  };
  return doc.dump();
}

ClassifierBundle bundle_from_json(std::string_view json) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json);
  } catch (const nlohmann::json::exception& e) {
    throw LoadError(std::string(kModule), std::string("corrupt bundle: ") + e.what());
  }
  try {
    if (!doc.is_object() || !doc.contains("version")) throw LoadError(std::string(kModule), "bundle has no version field");
    if (!doc.at("version").is_number_integer() || doc.at("version").get<int>() != ClassifierBundle::kFormatVersion) {
      throw VersionError(std::string(kModule), "unsupported bundle version " + doc.at("version").dump());
    }
    PreprocessConfig pc;
    const auto& pj = doc.at("preprocess");
    pc.filter_stopwords = pj.at("filter_stopwords").get<bool>();
    pc.stopwords = pj.at("stopwords").get<std::set<std::string>>();
    pc.preserve = pj.at("preserve").get<std::set<std::string>>();
    const auto stored = doc.at("preprocess_fingerprint").get<std::string>();
    if (stored != pc.fingerprint()) {
      throw LoadError(std::string(kModule), "stored preprocessing fingerprint " + stored +
                                                " does not match its preprocessing settings");
    }
    TfIdfModel tfidf = TfIdfModel::from_json(doc.at("tfidf").dump());

    std::array<std::optional<LinearSvmModel>, kCategoryCount> models;
    for (const auto& mj : doc.at("models")) {
      const auto cname = mj.at("category").get<std::string>();
      const auto c = category_from_name(cname);
      if (!c) throw LoadError(std::string(kModule), "unknown category '" + cname + "'");
      LinearSvmModel m;
      m.category = *c;
      m.bias = mj.at("bias").get<double>();
      m.weights = mj.at("weights").get<std::vector<double>>();
      const auto& h = mj.at("hyperparams");
      m.hyperparams = {h.at("lambda").get<double>(), h.at("epochs").get<int>(), h.at("seed").get<std::uint64_t>()};
      const auto& md = mj.at("metadata");
      m.metadata = {md.at("samples").get<std::size_t>(), md.at("positives").get<std::size_t>()};
      if (m.dimension() != tfidf.dimension()) {
        throw LoadError(std::string(kModule), "model for " + cname + " has dimension " + std::to_string(m.dimension()) +
                                                  ", vocabulary has " + std::to_string(tfidf.dimension()));
      }
      models[index_of(*c)] = std::move(m);
    }
    std::map<Category, std::string> failures;
    for (const auto& fj : doc.at("failures")) {
      const auto c = category_from_name(fj.at("category").get<std::string>());
      if (!c) throw LoadError(std::string(kModule), "unknown category in failures");
      failures.emplace(*c, fj.at("reason").get<std::string>());
    }
    return ClassifierBundle(std::move(pc), std::move(tfidf), std::move(models), std::move(failures));
  } catch (const nlohmann::json::exception& e) {
    throw LoadError(std::string(kModule), std::string("malformed bundle: ") + e.what());
  } catch (const LoadError&) {
    throw;
  } catch (const InputError& e) {
    throw LoadError(std::string(kModule), e.message());
  }
}

void save_bundle(const ClassifierBundle& bundle, const std::filesystem::path& path) {
  csv::write_text_file(path, bundle_to_json(bundle), kModule);
}

ClassifierBundle load_bundle(const std::filesystem::path& path) {
  return bundle_from_json(csv::read_text_file(path, kModule));
}

}  // namespace goldnews
