#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <vector>

#include "goldnews/app/config.hpp"

namespace goldnews::app {

// Exit codes shared by every command.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInsufficient = 1;
inline constexpr int kExitInput = 2;

// Splits the dataset, fits TF-IDF on the training part and trains the nine
// classifiers. Writes bundle.json, split.json and train.log to the output
// directory.
void cmd_train(const Config& config, std::ostream& log);

// Per-category metrics on the held-out split: eval_report.csv / .txt.
// Throws InsufficientDataError for an empty test split.
void cmd_eval(const Config& config, const std::optional<std::filesystem::path>& bundle_path, std::ostream& log);

// Labels every headline of an id/date/text CSV (only text is required).
// Output columns: id, date, the nine labels, then margin_<category>. Without
// an output path the CSV goes to `out`.
void cmd_classify(const std::filesystem::path& bundle_path, const std::filesystem::path& input,
                  const std::optional<std::filesystem::path>& output, const Config* config, std::ostream& out);

// Pairwise kappa between annotator files sharing one schema, as CSV to the
// output path or to `out`.
void cmd_agreement(const std::vector<std::filesystem::path>& annotations, const ColumnSchema& schema,
                   const std::optional<std::filesystem::path>& output, std::ostream& out);

// Daily directionality scores over the price calendar.
void cmd_score(const Config& config, const std::filesystem::path& labeled, const std::filesystem::path& output,
               std::ostream& log);

// Lagged regression per period. Returns false when no period had enough
// usable pairs.
bool cmd_causality(const Config& config, const std::filesystem::path& scores, const std::filesystem::path& output,
                   std::ostream& log);

// Maps a caught exception to the documented exit code and prints the
// module-qualified message.
int report_error(std::ostream& err);

}  // namespace goldnews::app
