#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "goldnews/causality.hpp"
#include "goldnews/classify.hpp"
#include "goldnews/corpus.hpp"
#include "goldnews/signal.hpp"
#include "goldnews/textprep.hpp"

namespace goldnews::app {

// One JSON document drives every command. Relative paths resolve against
// the directory holding the config file.
struct Config {
  std::filesystem::path base_dir;

  std::optional<std::filesystem::path> dataset;
  ColumnSchema schema = ColumnSchema::canonical();

  PreprocessConfig preprocess = PreprocessConfig::baseline();

  int max_n = 1;
  std::size_t max_len = kDefaultMaxSequenceLength;
  std::optional<std::filesystem::path> glove;
  std::size_t glove_dim = 300;

  CategoryHyperparams hyperparams = uniform_hyperparams();

  std::uint64_t split_seed = 42;
  double train_ratio = 0.8;

  WindowConfig window;
  std::optional<std::filesystem::path> prices;
  std::vector<AnalysisPeriod> periods = default_periods();

  std::filesystem::path output_dir = "out";

  std::filesystem::path output(std::string_view file) const { return output_dir / file; }
};

// Throws InputError (module "config") on malformed content, unknown keys or
// out-of-range values.
Config parse_config(std::string_view json, const std::filesystem::path& base_dir);
Config load_config(const std::filesystem::path& path);

// Throws IoError naming the path when it does not exist.
const std::filesystem::path& require_file(const std::optional<std::filesystem::path>& path, std::string_view what);
void require_file(const std::filesystem::path& path, std::string_view what);

}  // namespace goldnews::app
