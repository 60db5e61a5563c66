#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "goldnews/app/commands.hpp"
#include "goldnews/app/config.hpp"
#include "goldnews/error.hpp"
#include "goldnews/timestamp.hpp"

namespace fs = std::filesystem;
using namespace goldnews;

namespace {

struct Overrides {
  std::optional<std::string> output_dir;
  std::optional<std::string> dataset;
  std::optional<std::string> prices;
  std::optional<std::uint64_t> split_seed;
  std::optional<double> train_ratio;
  std::optional<std::string> cutoff;
  std::optional<std::string> timezone;
};

void add_overrides(CLI::App* cmd, Overrides& o) {
  cmd->add_option("--output-dir", o.output_dir, "Override output_dir");
  cmd->add_option("--dataset", o.dataset, "Override dataset.path");
  cmd->add_option("--prices", o.prices, "Override prices");
  cmd->add_option("--split-seed", o.split_seed, "Override split.seed");
  cmd->add_option("--train-ratio", o.train_ratio, "Override split.train_ratio");
  cmd->add_option("--cutoff", o.cutoff, "Override signal.cutoff (HH:MM)");
  cmd->add_option("--timezone", o.timezone, "Override signal.timezone (UTC offset)");
}

app::Config make_config(const std::string& path, const Overrides& o) {
  auto cfg = app::load_config(path);
  const fs::path cwd = fs::current_path();
  auto here = [&](const std::string& p) { return fs::path(p).is_absolute() ? fs::path(p) : cwd / p; };
  if (o.output_dir) cfg.output_dir = here(*o.output_dir);
  if (o.dataset) cfg.dataset = here(*o.dataset);
  if (o.prices) cfg.prices = here(*o.prices);
  if (o.split_seed) cfg.split_seed = *o.split_seed;
  if (o.train_ratio) {
    if (!(*o.train_ratio > 0.0 && *o.train_ratio < 1.0)) {
      throw InputError("config", "--train-ratio must lie in (0, 1)");
    }
    cfg.train_ratio = *o.train_ratio;
  }
  if (o.cutoff) cfg.window.cutoff = parse_time_of_day(*o.cutoff);
  if (o.timezone) cfg.window.zone_offset = parse_utc_offset(*o.timezone);
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App cli{"Gold news headline classification and price-causality analysis"};
  cli.require_subcommand(1);

  std::string config_path;
  Overrides overrides;

  auto* train = cli.add_subcommand("train", "Split the dataset and train the nine classifiers");
  train->add_option("-c,--config", config_path, "Pipeline config (JSON)")->required();
  add_overrides(train, overrides);

  std::optional<std::string> bundle_opt;
  auto* eval = cli.add_subcommand("eval", "Evaluate a bundle on the held-out split");
  eval->add_option("-c,--config", config_path, "Pipeline config (JSON)")->required();
  eval->add_option("-b,--bundle", bundle_opt, "Bundle file (default <output_dir>/bundle.json)");
  add_overrides(eval, overrides);

  std::string bundle_path;
  std::string input;
  std::optional<std::string> output;
  auto* classify = cli.add_subcommand("classify", "Label headlines with a trained bundle");
  classify->add_option("-b,--bundle", bundle_path, "Bundle file")->required();
  classify->add_option("-i,--input", input, "CSV with a text column (id and date optional)")->required();
  classify->add_option("-o,--output", output, "Labeled CSV (default: stdout)");
  std::optional<std::string> classify_config;
  classify->add_option("-c,--config", classify_config, "Config whose preprocessing must match the bundle");

  std::vector<std::string> annotations;
  std::optional<std::string> schema_path;
  auto* agreement = cli.add_subcommand("agreement", "Pairwise Cohen's kappa between annotator files");
  agreement->add_option("files", annotations, "Annotation CSVs, one per annotator")->required()->expected(2, -1);
  agreement->add_option("-s,--schema", schema_path, "Column schema (JSON or key=value)");
  agreement->add_option("-o,--output", output, "Kappa CSV (default: stdout)");

  std::string labeled;
  auto* score = cli.add_subcommand("score", "Daily directionality scores from labeled news");
  score->add_option("-c,--config", config_path, "Pipeline config (JSON)")->required();
  score->add_option("-l,--labeled", labeled, "Labeled news CSV from classify")->required();
  score->add_option("-o,--output", output, "Scores CSV (default <output_dir>/scores.csv)");
  add_overrides(score, overrides);

  std::string scores;
  auto* causality = cli.add_subcommand("causality", "Lagged regression of price changes on score changes");
  causality->add_option("-c,--config", config_path, "Pipeline config (JSON)")->required();
  causality->add_option("-s,--scores", scores, "Scores CSV from score")->required();
  causality->add_option("-o,--output", output, "Report JSON (default <output_dir>/causality.json)");
  add_overrides(causality, overrides);

  try {
    cli.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return cli.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return cli.exit(e);
  } catch (const CLI::ParseError& e) {
    cli.exit(e);
    return app::kExitInput;
  }

  try {
    if (train->parsed()) {
      app::cmd_train(make_config(config_path, overrides), std::cout);
    } else if (eval->parsed()) {
      std::optional<fs::path> b;
      if (bundle_opt) b = *bundle_opt;
      app::cmd_eval(make_config(config_path, overrides), b, std::cout);
    } else if (classify->parsed()) {
      std::optional<app::Config> cfg;
      if (classify_config) cfg = app::load_config(*classify_config);
      std::optional<fs::path> out;
      if (output) out = *output;
      app::cmd_classify(bundle_path, input, out, cfg ? &*cfg : nullptr, std::cout);
    } else if (agreement->parsed()) {
      const auto schema = schema_path ? load_schema(*schema_path) : ColumnSchema::canonical();
      const std::vector<fs::path> files(annotations.begin(), annotations.end());
      std::optional<fs::path> out;
      if (output) out = *output;
      app::cmd_agreement(files, schema, out, std::cout);
    } else if (score->parsed()) {
      const auto cfg = make_config(config_path, overrides);
      app::cmd_score(cfg, labeled, output ? fs::path(*output) : cfg.output("scores.csv"), std::cout);
    } else if (causality->parsed()) {
      const auto cfg = make_config(config_path, overrides);
      const bool ok =
          app::cmd_causality(cfg, scores, output ? fs::path(*output) : cfg.output("causality.json"), std::cout);
      if (!ok) {
        std::cerr << "goldnews: causality: no period had enough usable pairs\n";
        return app::kExitInsufficient;
      }
    }
  } catch (...) {
    return app::report_error(std::cerr);
  }
  return app::kExitOk;
}
