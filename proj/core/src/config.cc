// Copyright 2026 The Sumbench Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "sumbench/config.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iterator>
#include <limits>
#include <sstream>

#include "sumbench/error.h"

namespace sumbench::harness {
namespace {

std::string Trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

[[noreturn]] void Bad(const std::string& key, const std::string& value, const char* expected) {
  throw Error(ErrorCode::kTypeError,
              "key '" + key + "': cannot parse '" + value + "' as " + expected);
}

bool ParseBool(const std::string& key, const std::string& v) {
  if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
  if (v == "false" || v == "0" || v == "no" || v == "off") return false;
  Bad(key, v, "a boolean");
}

std::uint64_t ParseUnsigned(const std::string& key, const std::string& v,
                            std::uint64_t max = std::numeric_limits<std::uint64_t>::max()) {
  std::uint64_t out = 0;
  auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (v.empty() || ec != std::errc() || ptr != v.data() + v.size() || out > max) {
    Bad(key, v, "a non-negative integer");
  }
  return out;
}

std::uint32_t ParseU32(const std::string& key, const std::string& v) {
  return static_cast<std::uint32_t>(ParseUnsigned(key, v, std::numeric_limits<std::uint32_t>::max()));
}

double ParseDouble(const std::string& key, const std::string& v) {
  double out = 0.0;
  auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (v.empty() || ec != std::errc() || ptr != v.data() + v.size() || !std::isfinite(out)) {
    Bad(key, v, "a number");
  }
  return out;
}

std::vector<std::string> SplitList(const std::string& v) {
  std::vector<std::string> items;
  std::stringstream in(v);
  std::string item;
  while (std::getline(in, item, ',')) {
    item = Trim(item);
    if (!item.empty()) items.push_back(item);
  }
  return items;
}

std::string FormatDouble(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string Bool(bool b) { return b ? "true" : "false"; }

// Wraps a parse step so that any failure names the key.
template <typename Fn>
auto WithKey(const std::string& key, const std::string& value, Fn fn) {
  try {
    return fn();
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kTypeError && std::string(e.what()).find(key) != std::string::npos) {
      throw;
    }
    throw Error(ErrorCode::kTypeError, "key '" + key + "': invalid value '" + value + "'");
  }
}

void ApplyPipeline(const std::string& prefix, const RawSettings& s,
                   textproc::PipelineConfig& p) {
  auto get = [&](const std::string& name) { return s.at(prefix + name); };
  p.lowercase = ParseBool(prefix + "lowercase", get("lowercase"));
  p.strip_punctuation = ParseBool(prefix + "strip_punctuation", get("strip_punctuation"));
  p.expand_contractions = ParseBool(prefix + "expand_contractions", get("expand_contractions"));
  p.remove_stopwords = ParseBool(prefix + "remove_stopwords", get("remove_stopwords"));
  p.morphology = WithKey(prefix + "morphology", get("morphology"),
                         [&] { return textproc::ParseMorphology(get("morphology")); });
}

void RenderPipeline(const std::string& prefix, const textproc::PipelineConfig& p,
                    std::map<std::string, std::string>& out) {
  out[prefix + "lowercase"] = Bool(p.lowercase);
  out[prefix + "strip_punctuation"] = Bool(p.strip_punctuation);
  out[prefix + "expand_contractions"] = Bool(p.expand_contractions);
  out[prefix + "remove_stopwords"] = Bool(p.remove_stopwords);
  out[prefix + "morphology"] = std::string(textproc::MorphologyName(p.morphology));
}

}  // namespace

std::string_view SystemName(SystemKind kind) {
  switch (kind) {
    case SystemKind::kTfidf: return "tfidf";
    case SystemKind::kGsg: return "gsg";
    case SystemKind::kLead: return "lead";
    case SystemKind::kRandom: return "random";
    case SystemKind::kTransformer: return "transformer";
  }
  return "?";
}

SystemKind ParseSystem(std::string_view name) {
  for (SystemKind k : {SystemKind::kTfidf, SystemKind::kGsg, SystemKind::kLead, SystemKind::kRandom,
                       SystemKind::kTransformer}) {
    if (SystemName(k) == name) return k;
  }
  throw Error(ErrorCode::kTypeError, "unknown system '" + std::string(name) + "'");
}

const std::vector<std::pair<std::string, std::string>>& ConfigKeys() {
  static const std::vector<std::pair<std::string, std::string>> kKeys = {
      {"corpus_root", ""},
      {"corpus.articles_dir", "News Articles"},
      {"corpus.summaries_dir", "Summaries"},
      {"systems", "tfidf,gsg,lead,random"},
      {"transformer.checkpoint", ""},
      {"budget.count", ""},
      {"budget.ratio", "0.2"},
      {"rouge", "1,2,L"},
      {"split.train_fraction", "0.8"},
      {"split.seed", "7"},
      {"eval.subset", "all"},
      {"random.seed", "0"},
      {"gsg.ratio", "0.3"},
      {"pipeline.lowercase", "true"},
      {"pipeline.strip_punctuation", "true"},
      {"pipeline.expand_contractions", "true"},
      {"pipeline.remove_stopwords", "true"},
      {"pipeline.morphology", "stem"},
      {"metric.lowercase", "true"},
      {"metric.strip_punctuation", "true"},
      {"metric.expand_contractions", "false"},
      {"metric.remove_stopwords", "false"},
      {"metric.morphology", "none"},
      {"output.path", ""},
      {"output.format", "csv"},
      {"model.d_model", "32"},
      {"model.n_heads", "4"},
      {"model.n_enc_layers", "2"},
      {"model.n_dec_layers", "2"},
      {"model.d_ff", "64"},
      {"model.max_len", "64"},
      {"model.dropout", "0.1"},
      {"model.seed", "1"},
      {"train.lr", "0.001"},
      {"train.batch_size", "8"},
      {"train.steps", "1000"},
      {"train.grad_clip", "1"},
      {"train.warmup_steps", "0"},
      {"train.pairs", "gsg"},
      {"vocab.min_freq", "1"},
      {"vocab.max_size", "5000"},
      {"decode.strategy", "greedy"},
      {"decode.beam_width", "4"},
      {"decode.length_penalty", "0.7"},
      {"decode.max_out", "32"},
  };
  return kKeys;
}

namespace {

bool IsKnownKey(const std::string& key) {
  const auto& keys = ConfigKeys();
  return std::any_of(keys.begin(), keys.end(), [&](const auto& kv) { return kv.first == key; });
}

void CheckKnown(const RawSettings& s) {
  for (const auto& [key, value] : s) {
    if (!IsKnownKey(key)) throw Error(ErrorCode::kUnknownKey, "unknown configuration key '" + key + "'");
  }
}

}  // namespace

RawSettings ParseSettings(std::string_view text) {
  RawSettings out;
  std::istringstream in{std::string(text)};
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = Trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw Error(ErrorCode::kTypeError,
                  "line " + std::to_string(number) + ": expected 'key = value', got '" + line + "'");
    }
    const std::string key = Trim(line.substr(0, eq));
    if (!IsKnownKey(key)) {
      throw Error(ErrorCode::kUnknownKey, "unknown configuration key '" + key + "' on line " +
                                              std::to_string(number));
    }
    out[key] = Trim(line.substr(eq + 1));
  }
  return out;
}

RawSettings ReadSettingsFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kMissingRequired, "cannot read config file " + path.string());
  const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return ParseSettings(text);
}

ExperimentConfig BuildConfig(const RawSettings& file, const RawSettings& overrides,
                             bool require_corpus, bool require_checkpoint) {
  CheckKnown(file);
  CheckKnown(overrides);
  RawSettings explicit_settings = file;
  if (overrides.count("budget.count")) explicit_settings.erase("budget.ratio");
  if (overrides.count("budget.ratio")) explicit_settings.erase("budget.count");
  for (const auto& [key, value] : overrides) explicit_settings[key] = value;

  RawSettings s;
  for (const auto& [key, value] : ConfigKeys()) s[key] = value;
  for (const auto& [key, value] : explicit_settings) s[key] = value;

  ExperimentConfig c;
  c.corpus_root = s["corpus_root"];
  if (require_corpus && c.corpus_root.empty()) {
    throw Error(ErrorCode::kMissingRequired, "corpus_root is required (set it or pass --corpus)");
  }
  c.layout.articles_dir = s["corpus.articles_dir"];
  c.layout.summaries_dir = s["corpus.summaries_dir"];

  c.systems.clear();
  for (const auto& name : SplitList(s["systems"])) {
    const SystemKind kind = WithKey("systems", s["systems"], [&] { return ParseSystem(name); });
    if (std::find(c.systems.begin(), c.systems.end(), kind) != c.systems.end()) {
      throw Error(ErrorCode::kTypeError, "key 'systems': '" + name + "' listed twice");
    }
    c.systems.push_back(kind);
  }
  if (c.systems.empty()) throw Error(ErrorCode::kTypeError, "key 'systems': no system given");
  c.transformer_checkpoint = s["transformer.checkpoint"];
  const bool wants_transformer =
      std::find(c.systems.begin(), c.systems.end(), SystemKind::kTransformer) != c.systems.end();
  if (require_checkpoint && wants_transformer && c.transformer_checkpoint.empty()) {
    throw Error(ErrorCode::kMissingRequired, "the transformer system needs transformer.checkpoint");
  }

  const bool has_count = explicit_settings.count("budget.count") && !explicit_settings["budget.count"].empty();
  const bool has_ratio = explicit_settings.count("budget.ratio") && !explicit_settings["budget.ratio"].empty();
  if (has_count && has_ratio) {
    throw Error(ErrorCode::kTypeError, "key 'budget.count': cannot be combined with budget.ratio");
  }
  if (has_count) {
    const auto k = ParseUnsigned("budget.count", s["budget.count"]);
    c.budget = WithKey("budget.count", s["budget.count"],
                       [&] { return ExtractBudget::Count(static_cast<long>(k)); });
  } else {
    const double r = ParseDouble("budget.ratio", s["budget.ratio"]);
    c.budget = WithKey("budget.ratio", s["budget.ratio"], [&] { return ExtractBudget::Ratio(r); });
  }

  c.rouge_variants.clear();
  for (const auto& name : SplitList(s["rouge"])) {
    c.rouge_variants.push_back(WithKey("rouge", s["rouge"], [&] { return rouge::RougeVariant::Parse(name); }));
  }
  std::sort(c.rouge_variants.begin(), c.rouge_variants.end());
  c.rouge_variants.erase(std::unique(c.rouge_variants.begin(), c.rouge_variants.end()),
                         c.rouge_variants.end());
  if (c.rouge_variants.empty()) throw Error(ErrorCode::kTypeError, "key 'rouge': no variant given");

  c.split.train_fraction = ParseDouble("split.train_fraction", s["split.train_fraction"]);
  if (!(c.split.train_fraction > 0.0 && c.split.train_fraction < 1.0)) {
    Bad("split.train_fraction", s["split.train_fraction"], "a fraction in (0, 1)");
  }
  c.split.seed = ParseUnsigned("split.seed", s["split.seed"]);
  if (s["eval.subset"] == "all") {
    c.eval_subset = EvalSubset::kAll;
  } else if (s["eval.subset"] == "test") {
    c.eval_subset = EvalSubset::kTest;
  } else {
    Bad("eval.subset", s["eval.subset"], "'all' or 'test'");
  }
  c.random_seed = ParseUnsigned("random.seed", s["random.seed"]);
  c.gsg_ratio = ParseDouble("gsg.ratio", s["gsg.ratio"]);
  if (!(c.gsg_ratio > 0.0 && c.gsg_ratio < 1.0)) Bad("gsg.ratio", s["gsg.ratio"], "a ratio in (0, 1)");

  ApplyPipeline("pipeline.", s, c.pipeline);
  ApplyPipeline("metric.", s, c.metric);

  c.output_path = s["output.path"];
  if (s["output.format"] == "csv") {
    c.output_format = OutputFormat::kCsv;
  } else if (s["output.format"] == "markdown" || s["output.format"] == "md") {
    c.output_format = OutputFormat::kMarkdown;
  } else {
    Bad("output.format", s["output.format"], "'csv' or 'markdown'");
  }

  c.model.d_model = ParseU32("model.d_model", s["model.d_model"]);
  c.model.n_heads = ParseU32("model.n_heads", s["model.n_heads"]);
  c.model.n_enc_layers = ParseU32("model.n_enc_layers", s["model.n_enc_layers"]);
  c.model.n_dec_layers = ParseU32("model.n_dec_layers", s["model.n_dec_layers"]);
  c.model.d_ff = ParseU32("model.d_ff", s["model.d_ff"]);
  c.model.max_len = ParseU32("model.max_len", s["model.max_len"]);
  c.model.dropout_rate = ParseDouble("model.dropout", s["model.dropout"]);
  c.model.seed = ParseUnsigned("model.seed", s["model.seed"]);
  if (c.model.d_model % 2 != 0) Bad("model.d_model", s["model.d_model"], "an even integer");
  {
    // vocab_size is only known after building the vocabulary.
    transformer::ModelConfig probe = c.model;
    probe.vocab_size = 6;
    WithKey("model.*", "", [&] {
      probe.Validate();
      return 0;
    });
  }

  c.train.learning_rate = ParseDouble("train.lr", s["train.lr"]);
  if (c.train.learning_rate < 0.0) Bad("train.lr", s["train.lr"], "a non-negative number");
  c.train.batch_size = ParseUnsigned("train.batch_size", s["train.batch_size"]);
  if (c.train.batch_size == 0) Bad("train.batch_size", s["train.batch_size"], "a positive integer");
  c.train.steps = ParseUnsigned("train.steps", s["train.steps"]);
  c.train.grad_clip = ParseDouble("train.grad_clip", s["train.grad_clip"]);
  c.train.warmup_steps = ParseUnsigned("train.warmup_steps", s["train.warmup_steps"]);
  if (s["train.pairs"] == "gsg") {
    c.train_pairs = PairSource::kGsg;
  } else if (s["train.pairs"] == "reference") {
    c.train_pairs = PairSource::kReference;
  } else {
    Bad("train.pairs", s["train.pairs"], "'gsg' or 'reference'");
  }
  c.vocab_min_freq = static_cast<int>(ParseUnsigned("vocab.min_freq", s["vocab.min_freq"], 1u << 30));
  if (c.vocab_min_freq < 1) Bad("vocab.min_freq", s["vocab.min_freq"], "an integer >= 1");
  c.vocab_max_size = ParseUnsigned("vocab.max_size", s["vocab.max_size"]);
  if (c.vocab_max_size < 6) Bad("vocab.max_size", s["vocab.max_size"], "an integer >= 6");

  c.decode.strategy = WithKey("decode.strategy", s["decode.strategy"],
                              [&] { return transformer::ParseDecodeStrategy(s["decode.strategy"]); });
  c.decode.beam_width = ParseUnsigned("decode.beam_width", s["decode.beam_width"]);
  if (c.decode.beam_width == 0) Bad("decode.beam_width", s["decode.beam_width"], "a positive integer");
  c.decode.length_penalty = ParseDouble("decode.length_penalty", s["decode.length_penalty"]);
  c.decode.max_out = ParseUnsigned("decode.max_out", s["decode.max_out"]);
  if (c.decode.max_out > c.model.max_len) {
    Bad("decode.max_out", s["decode.max_out"], "an integer <= model.max_len");
  }
  return c;
}

std::string CanonicalConfig(const ExperimentConfig& c) {
  std::map<std::string, std::string> out;
  out["corpus_root"] = c.corpus_root.string();
  out["corpus.articles_dir"] = c.layout.articles_dir;
  out["corpus.summaries_dir"] = c.layout.summaries_dir;
  std::string systems;
  for (SystemKind k : c.systems) systems += (systems.empty() ? "" : ",") + std::string(SystemName(k));
  out["systems"] = systems;
  out["transformer.checkpoint"] = c.transformer_checkpoint.string();
  const bool count = c.budget.mode() == ExtractBudget::Mode::kCount;
  out["budget.count"] = count ? std::to_string(c.budget.count()) : "";
  out["budget.ratio"] = count ? "" : FormatDouble(c.budget.ratio());
  std::string variants;
  for (const auto& v : c.rouge_variants) {
    variants += (variants.empty() ? "" : ",") + (v.is_lcs() ? std::string("L") : std::to_string(v.order()));
  }
  out["rouge"] = variants;
  out["split.train_fraction"] = FormatDouble(c.split.train_fraction);
  out["split.seed"] = std::to_string(c.split.seed);
  out["eval.subset"] = c.eval_subset == EvalSubset::kAll ? "all" : "test";
  out["random.seed"] = std::to_string(c.random_seed);
  out["gsg.ratio"] = FormatDouble(c.gsg_ratio);
  RenderPipeline("pipeline.", c.pipeline, out);
  RenderPipeline("metric.", c.metric, out);
  out["output.path"] = c.output_path.string();
  out["output.format"] = c.output_format == OutputFormat::kCsv ? "csv" : "markdown";
  out["model.d_model"] = std::to_string(c.model.d_model);
  out["model.n_heads"] = std::to_string(c.model.n_heads);
  out["model.n_enc_layers"] = std::to_string(c.model.n_enc_layers);
  out["model.n_dec_layers"] = std::to_string(c.model.n_dec_layers);
  out["model.d_ff"] = std::to_string(c.model.d_ff);
  out["model.max_len"] = std::to_string(c.model.max_len);
  out["model.dropout"] = FormatDouble(c.model.dropout_rate);
  out["model.seed"] = std::to_string(c.model.seed);
  out["train.lr"] = FormatDouble(c.train.learning_rate);
  out["train.batch_size"] = std::to_string(c.train.batch_size);
  out["train.steps"] = std::to_string(c.train.steps);
  out["train.grad_clip"] = FormatDouble(c.train.grad_clip);
  out["train.warmup_steps"] = std::to_string(c.train.warmup_steps);
  out["train.pairs"] = c.train_pairs == PairSource::kGsg ? "gsg" : "reference";
  out["vocab.min_freq"] = std::to_string(c.vocab_min_freq);
  out["vocab.max_size"] = std::to_string(c.vocab_max_size);
  out["decode.strategy"] = std::string(transformer::DecodeStrategyName(c.decode.strategy));
  out["decode.beam_width"] = std::to_string(c.decode.beam_width);
  out["decode.length_penalty"] = FormatDouble(c.decode.length_penalty);
  out["decode.max_out"] = std::to_string(c.decode.max_out);

  std::string text;
  for (const auto& [key, value] : out) text += key + " = " + value + "\n";
  return text;
}

std::uint64_t Fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string ConfigDigest(const ExperimentConfig& config) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(Fnv1a64(CanonicalConfig(config))));
  return buf;
}

}  // namespace sumbench::harness
