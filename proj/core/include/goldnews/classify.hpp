#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "goldnews/category.hpp"
#include "goldnews/corpus.hpp"
#include "goldnews/textprep.hpp"
#include "goldnews/vectorize.hpp"

namespace goldnews {

// L2-regularized hinge loss, minimized by stochastic subgradient steps with
// weight learning rate 1 / (lambda * t) and bias step 1 / (1 + lambda * t).
struct SvmHyperparams {
  double lambda = 1e-4;
  int epochs = 20;
  std::uint64_t seed = 42;

  // Throws InputError unless lambda > 0 and epochs >= 1.
  void validate() const;

  friend bool operator==(const SvmHyperparams&, const SvmHyperparams&) = default;
};

struct TrainingMetadata {
  std::size_t samples = 0;
  std::size_t positives = 0;

  friend bool operator==(const TrainingMetadata&, const TrainingMetadata&) = default;
};

struct LinearSvmModel {
  std::optional<Category> category;
  std::vector<double> weights;
  double bias = 0.0;
  SvmHyperparams hyperparams;
  TrainingMetadata metadata;

  std::size_t dimension() const { return weights.size(); }

  friend bool operator==(const LinearSvmModel&, const LinearSvmModel&) = default;
};

struct Prediction {
  int label = 1;  // +1 or -1
  double margin = 0.0;
};

// label is +1 iff margin >= 0. Throws InputError on a dimension mismatch.
Prediction predict(const LinearSvmModel& model, const SparseVector& x);

// Per-step record of a training run, filled when requested.
struct TrainingTrace {
  // Full-data objective after each epoch.
  std::vector<double> epoch_objective;
  // 1 where the step's sample violated the margin (y * f(x) < 1).
  std::vector<std::uint8_t> margin_violations;
  // Predicted label (+1 / -1) for the step's sample before its update.
  std::vector<std::int8_t> decisions;
  // Sample index used at each step.
  std::vector<std::uint32_t> sample_order;
};

// (lambda / 2) |w|^2 + (1 / n) sum max(0, 1 - y (w.x + b)); b is not
// regularized.
double hinge_objective(std::span<const double> weights, double bias, std::span<const SparseVector> x,
                       std::span<const int> y, double lambda);

struct Subgradient {
  std::vector<double> weights;
  double bias = 0.0;
};

// Subgradient of hinge_objective, taking 0 for the hinge at its kink.
Subgradient hinge_subgradient(std::span<const double> weights, double bias, std::span<const SparseVector> x,
                              std::span<const int> y, double lambda);

// y entries are -1 or +1. Runs epochs * n steps, shuffling with the seeded
// generator at the start of every epoch; identical inputs give a
// bit-identical model. Throws TrainingError when only one class is present
// and InputError on mismatched sizes or dimensions.
LinearSvmModel train_svm(std::span<const SparseVector> x, std::span<const int> y, const SvmHyperparams& hp,
                         TrainingTrace* trace = nullptr);

struct TrainTestSplit {
  std::vector<std::size_t> train;
  std::vector<std::size_t> test;
};

// Seeded shuffle of 0..n-1; the first round(n * train_ratio) go to train.
// Both halves are returned in ascending order.
TrainTestSplit train_test_split(std::size_t n, double train_ratio, std::uint64_t seed);

using CategoryHyperparams = std::array<SvmHyperparams, kCategoryCount>;

inline CategoryHyperparams uniform_hyperparams(const SvmHyperparams& hp = {}) {
  CategoryHyperparams out;
  out.fill(hp);
  return out;
}

struct LabelPredictions {
  // Empty where the bundle has no model for the category.
  std::array<std::optional<Prediction>, kCategoryCount> by_category;

  const std::optional<Prediction>& operator[](Category c) const { return by_category[index_of(c)]; }
};

// Nine per-category classifiers over one shared TF-IDF model.
class ClassifierBundle {
 public:
  static constexpr int kFormatVersion = 1;

  ClassifierBundle(PreprocessConfig preprocess, TfIdfModel tfidf,
                   std::array<std::optional<LinearSvmModel>, kCategoryCount> models,
                   std::map<Category, std::string> failures);

  const PreprocessConfig& preprocess_config() const { return preprocess_; }
  const std::string& preprocess_fingerprint() const { return fingerprint_; }
  const TfIdfModel& tfidf() const { return tfidf_; }
  const LinearSvmModel* model(Category c) const;
  const std::map<Category, std::string>& failures() const { return failures_; }
  bool is_partial() const { return !failures_.empty(); }

  // Throws FingerprintMismatchError when `config` preprocesses differently
  // from the configuration the bundle was trained with.
  void check_fingerprint(const PreprocessConfig& config) const;

  LabelPredictions classify(std::string_view text) const;
  LabelPredictions classify(std::string_view text, const PreprocessConfig& config) const;
  LabelPredictions classify_vector(const SparseVector& x) const;

 private:
  PreprocessConfig preprocess_;
  std::string fingerprint_;
  TfIdfModel tfidf_;
  std::array<std::optional<LinearSvmModel>, kCategoryCount> models_;
  std::map<Category, std::string> failures_;
};

// Trains the nine categories independently (concurrently) on every headline
// given. A category whose labels are single-class is recorded in failures()
// and the other categories still train.
ClassifierBundle train_bundle(std::span<const AnnotatedHeadline> dataset, const PreprocessConfig& preprocess,
                              TfIdfModel tfidf, const CategoryHyperparams& hp = uniform_hyperparams());

std::string bundle_to_json(const ClassifierBundle& bundle);
// Throws LoadError on malformed content, VersionError on an unknown version.
ClassifierBundle bundle_from_json(std::string_view json);

void save_bundle(const ClassifierBundle& bundle, const std::filesystem::path& path);
ClassifierBundle load_bundle(const std::filesystem::path& path);

}  // namespace goldnews
