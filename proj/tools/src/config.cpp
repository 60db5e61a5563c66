#include "goldnews/app/config.hpp"

#include <json.hpp>

#include "goldnews/csv.hpp"
#include "goldnews/error.hpp"
#include "goldnews/timestamp.hpp"

namespace goldnews::app {
namespace {

using nlohmann::json;

constexpr std::string_view kModule = "config";

[[noreturn]] void fail(const std::string& message) { throw InputError(std::string(kModule), message); }

void check_keys(const json& obj, std::string_view where, std::initializer_list<std::string_view> allowed) {
  if (!obj.is_object()) fail(std::string(where) + " must be an object");
  for (const auto& [key, _] : obj.items()) {
    bool ok = false;
    for (auto a : allowed) ok = ok || key == a;
    if (!ok) fail("unknown key '" + key + "' in " + std::string(where));
  }
}

std::filesystem::path resolve(const std::filesystem::path& base, const std::string& p) {
  const std::filesystem::path path(p);
  return path.is_absolute() ? path : (base / path).lexically_normal();
}

template <typename T>
T get(const json& obj, const char* key, std::string_view where) {
  try {
    return obj.at(key).get<T>();
  } catch (const json::exception&) {
    fail(std::string(where) + "." + key + " has the wrong type");
  }
}

void read_hyperparams(const json& j, SvmHyperparams& hp, const std::string& where) {
  check_keys(j, where, {"lambda", "epochs", "seed", "per_category"});
  if (j.contains("lambda")) hp.lambda = get<double>(j, "lambda", where);
  if (j.contains("epochs")) hp.epochs = get<int>(j, "epochs", where);
  if (j.contains("seed")) hp.seed = get<std::uint64_t>(j, "seed", where);
  try {
    hp.validate();
  } catch (const InputError& e) {
    fail(where + ": " + e.message());
  }
}

}  // namespace

Config parse_config(std::string_view text, const std::filesystem::path& base_dir) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(std::string("malformed JSON: ") + e.what());
  }
  check_keys(doc, "config",
             {"dataset", "preprocess", "vectorizer", "svm", "split", "signal", "prices", "periods", "output_dir"});

  Config cfg;
  cfg.base_dir = base_dir;

  if (doc.contains("dataset")) {
    const auto& d = doc["dataset"];
    if (d.is_string()) {
      cfg.dataset = resolve(base_dir, d.get<std::string>());
    } else {
      check_keys(d, "dataset", {"path", "schema"});
      if (d.contains("path")) cfg.dataset = resolve(base_dir, get<std::string>(d, "path", "dataset"));
      if (d.contains("schema")) {
        const auto& s = d["schema"];
        if (s.is_string()) {
          cfg.schema = load_schema(resolve(base_dir, s.get<std::string>()));
        } else {
          cfg.schema = parse_schema(s.dump());
        }
      }
    }
  }

  if (doc.contains("preprocess")) {
    const auto& p = doc["preprocess"];
    check_keys(p, "preprocess", {"filter_stopwords", "stopwords", "preserve"});
    if (p.contains("filter_stopwords")) cfg.preprocess.filter_stopwords = get<bool>(p, "filter_stopwords", "preprocess");
    auto words = [&](const char* key) {
      const auto& v = p[key];
      if (v.is_string()) return load_word_list(resolve(base_dir, v.get<std::string>()));
      std::set<std::string> out;
      for (const auto& w : get<std::vector<std::string>>(p, key, "preprocess")) out.insert(w);
      return out;
    };
    if (p.contains("stopwords")) cfg.preprocess.stopwords = words("stopwords");
    if (p.contains("preserve")) cfg.preprocess.preserve = words("preserve");
  }

  if (doc.contains("vectorizer")) {
    const auto& v = doc["vectorizer"];
    check_keys(v, "vectorizer", {"max_n", "max_len", "glove", "glove_dim"});
    if (v.contains("max_n")) cfg.max_n = get<int>(v, "max_n", "vectorizer");
    if (cfg.max_n < 1 || cfg.max_n > 3) fail("vectorizer.max_n must be 1, 2 or 3");
    if (v.contains("max_len")) cfg.max_len = get<std::size_t>(v, "max_len", "vectorizer");
    if (cfg.max_len == 0) fail("vectorizer.max_len must be positive");
    if (v.contains("glove")) cfg.glove = resolve(base_dir, get<std::string>(v, "glove", "vectorizer"));
    if (v.contains("glove_dim")) cfg.glove_dim = get<std::size_t>(v, "glove_dim", "vectorizer");
  }

  if (doc.contains("svm")) {
    const auto& s = doc["svm"];
    SvmHyperparams base;
    read_hyperparams(s, base, "svm");
    cfg.hyperparams = uniform_hyperparams(base);
    if (s.contains("per_category")) {
      const auto& pc = s["per_category"];
      if (!pc.is_object()) fail("svm.per_category must be an object");
      for (const auto& [key, value] : pc.items()) {
        const auto c = category_from_name(key);
        if (!c) fail("unknown category '" + key + "' in svm.per_category");
        if (value.contains("per_category")) fail("svm.per_category." + key + " cannot nest per_category");
        read_hyperparams(value, cfg.hyperparams[index_of(*c)], "svm.per_category." + key);
      }
    }
  }

  if (doc.contains("split")) {
    const auto& s = doc["split"];
    check_keys(s, "split", {"seed", "train_ratio"});
    if (s.contains("seed")) cfg.split_seed = get<std::uint64_t>(s, "seed", "split");
    if (s.contains("train_ratio")) cfg.train_ratio = get<double>(s, "train_ratio", "split");
  }
  if (!(cfg.train_ratio > 0.0 && cfg.train_ratio < 1.0)) fail("split.train_ratio must lie in (0, 1)");

  if (doc.contains("signal")) {
    const auto& s = doc["signal"];
    check_keys(s, "signal", {"cutoff", "timezone"});
    try {
      if (s.contains("cutoff")) cfg.window.cutoff = parse_time_of_day(get<std::string>(s, "cutoff", "signal"));
      if (s.contains("timezone")) cfg.window.zone_offset = parse_utc_offset(get<std::string>(s, "timezone", "signal"));
    } catch (const InputError& e) {
      fail("signal: " + e.message());
    }
  }

  if (doc.contains("prices")) cfg.prices = resolve(base_dir, get<std::string>(doc, "prices", "config"));

  if (doc.contains("periods")) {
    const auto& ps = doc["periods"];
    if (!ps.is_array()) fail("periods must be an array");
    cfg.periods.clear();
    for (const auto& p : ps) {
      check_keys(p, "periods[]", {"name", "start", "end"});
      AnalysisPeriod period;
      try {
        period.start = parse_date(get<std::string>(p, "start", "periods[]"));
        period.end = parse_date(get<std::string>(p, "end", "periods[]"));
      } catch (const InputError& e) {
        fail("periods: " + e.message());
      }
      period.name = p.contains("name") ? get<std::string>(p, "name", "periods[]")
                                       : format_date(period.start) + "/" + format_date(period.end);
      if (period.end < period.start) fail("period '" + period.name + "' ends before it starts");
      cfg.periods.push_back(std::move(period));
    }
  }

  if (doc.contains("output_dir")) cfg.output_dir = get<std::string>(doc, "output_dir", "config");
  cfg.output_dir = resolve(base_dir, cfg.output_dir.string());
  return cfg;
}

Config load_config(const std::filesystem::path& path) {
  const auto text = csv::read_text_file(path, kModule);
  auto base = path.parent_path();
  if (base.empty()) base = ".";
  return parse_config(text, base);
}

const std::filesystem::path& require_file(const std::optional<std::filesystem::path>& path, std::string_view what) {
  if (!path) fail(std::string(what) + " is not configured");
  require_file(*path, what);
  return *path;
}

void require_file(const std::filesystem::path& path, std::string_view what) {
  if (!std::filesystem::is_regular_file(path)) {
    throw IoError(std::string(kModule), std::string(what) + " not found: '" + path.string() + "'");
  }
}

}  // namespace goldnews::app
