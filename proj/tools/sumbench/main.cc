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

// sumbench: train, summarize, evaluate and report.
//
// Exit codes: 0 success, 1 configuration error, 2 data error.

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <string>
#include <vector>

#include "sumbench/checkpoint.h"
#include "sumbench/config.h"
#include "sumbench/error.h"
#include "sumbench/experiment.h"
#include "sumbench/report.h"

namespace fs = std::filesystem;
using namespace sumbench;
using namespace sumbench::harness;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitData = 2;

// Flags shared by the subcommands that build an ExperimentConfig. Only flags
// the user actually passed become overrides.
struct CommonFlags {
  std::string config_file;
  std::vector<std::string> assignments;  // --set key=value
  RawSettings overrides;

  void Attach(CLI::App* cmd) {
    cmd->add_option("--config", config_file, "Settings file of 'key = value' lines")
        ->check(CLI::ExistingFile);
    cmd->add_option("--set", assignments, "Override any settings key, as key=value")
        ->take_all();
  }

  ExperimentConfig Build(bool require_corpus, bool require_checkpoint) {
    RawSettings file;
    if (!config_file.empty()) file = ReadSettingsFile(config_file);
    RawSettings flags;
    for (const auto& a : assignments) {
      const auto eq = a.find('=');
      if (eq == std::string::npos) {
        throw Error(ErrorCode::kTypeError, "--set expects key=value, got '" + a + "'");
      }
      // Route through the settings parser so keys are validated once.
      for (auto& [k, v] : ParseSettings(a.substr(0, eq) + " = " + a.substr(eq + 1) + "\n")) {
        flags[k] = v;
      }
    }
    // Dedicated flags win over --set.
    for (const auto& [k, v] : overrides) flags[k] = v;
    return BuildConfig(file, flags, require_corpus, require_checkpoint);
  }
};

void AddSetting(CLI::App* cmd, const std::string& flag, const std::string& key,
                RawSettings& overrides, const std::string& help) {
  cmd->add_option_function<std::string>(
      flag, [&overrides, key](const std::string& v) { overrides[key] = v; }, help);
}

void WriteOutput(const std::string& text, const fs::path& path) {
  if (path.empty()) {
    std::cout << text << std::flush;
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIoError, "cannot write " + path.string());
  out << text;
  if (!out) throw Error(ErrorCode::kIoError, "short write to " + path.string());
}

std::string ReadInput(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + path.string());
  return std::string((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
}

double SecondsSince(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

int RunEvaluate(CommonFlags& flags, const std::string& format) {
  if (!format.empty()) flags.overrides["output.format"] = format;
  const ExperimentConfig config = flags.Build(true, true);
  const Report report = RunExperiment(config);
  WriteOutput(RenderReport(report, config.output_format), config.output_path);
  for (const auto& [system, skipped] : report.metadata.skipped) {
    if (skipped > 0) std::cerr << "skipped " << skipped << " document(s) for " << system << "\n";
  }
  std::fprintf(stderr, "evaluated %zu documents in %.2f s\n", report.metadata.evaluated_documents,
               report.metadata.wall_clock_seconds);
  return kExitOk;
}

int RunTrain(CommonFlags& flags, const fs::path& out, std::size_t log_every) {
  const auto start = std::chrono::steady_clock::now();
  const ExperimentConfig config = flags.Build(true, false);
  const Corpus corpus = LoadCorpus(config.corpus_root, config.layout);
  const TrainOutcome outcome = TrainTransformer(corpus, config, [&](std::size_t step, double loss) {
    const std::size_t done = step + 1;
    if (log_every > 0 && (done % log_every == 0 || done == config.train.steps)) {
      std::fprintf(stderr, "step %zu loss %.4f\n", done, loss);
    }
  });
  transformer::SaveCheckpoint(outcome.system.model, outcome.system.vocab, out);
  std::fprintf(stderr, "trained on %zu pairs, vocabulary %zu, wrote %s in %.2f s\n",
               outcome.pair_count, outcome.system.vocab.size(), out.string().c_str(),
               SecondsSince(start));
  return kExitOk;
}

int RunSummarize(CommonFlags& flags, const std::string& system, const fs::path& model,
                 const fs::path& input, bool no_title) {
  const ExperimentConfig config = flags.Build(false, false);
  const Document doc = ReadArticle(input, !no_title);
  std::string summary;
  if (!model.empty()) {
    auto loaded = transformer::LoadCheckpoint(model);
    const TransformerSystem ts{std::move(loaded.model), std::move(loaded.vocab)};
    summary = SummarizeTransformer(ts, doc.body, config, TokenBudget(doc.body, config));
  } else {
    const SystemKind kind = ParseSystem(system);
    if (kind == SystemKind::kTransformer) {
      throw Error(ErrorCode::kMissingRequired, "the transformer system needs --model");
    }
    summary = SummarizeExtractive(kind, doc.body, doc.id, config);
  }
  std::cout << summary << "\n";
  return kExitOk;
}

int RunReport(const fs::path& input, const std::string& format, const fs::path& out) {
  const Report report = ParseCsvReport(ReadInput(input));
  WriteOutput(RenderReport(report, format == "csv" ? OutputFormat::kCsv : OutputFormat::kMarkdown),
              out);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Summarization benchmark: extractive baselines, a small transformer and ROUGE"};
  app.require_subcommand(1);

  // evaluate
  CommonFlags eval_flags;
  std::string eval_format;
  CLI::App* evaluate = app.add_subcommand("evaluate", "Summarize every document and score it");
  eval_flags.Attach(evaluate);
  AddSetting(evaluate, "--corpus", "corpus_root", eval_flags.overrides, "Corpus root directory");
  AddSetting(evaluate, "--systems", "systems", eval_flags.overrides,
             "Comma list of tfidf, gsg, lead, random, transformer");
  AddSetting(evaluate, "--rouge", "rouge", eval_flags.overrides, "Comma list of 1, 2, ..., L");
  AddSetting(evaluate, "--budget-ratio", "budget.ratio", eval_flags.overrides,
             "Summary length as a fraction of the sentences");
  AddSetting(evaluate, "--budget-count", "budget.count", eval_flags.overrides,
             "Summary length in sentences");
  AddSetting(evaluate, "--model", "transformer.checkpoint", eval_flags.overrides,
             "Checkpoint for the transformer system");
  AddSetting(evaluate, "--subset", "eval.subset", eval_flags.overrides,
             "Documents to evaluate: all or test");
  AddSetting(evaluate, "--out", "output.path", eval_flags.overrides,
             "Report file (default: standard output)");
  evaluate->add_option_function<std::string>(
      "--seed",
      [&](const std::string& v) {
        eval_flags.overrides["split.seed"] = v;
        eval_flags.overrides["random.seed"] = v;
      },
      "Seed for the split and the random baseline");
  evaluate->add_option("--format", eval_format, "csv or markdown")
      ->check(CLI::IsMember({"csv", "markdown"}));

  // train
  CommonFlags train_flags;
  fs::path train_out;
  std::size_t log_every = 100;
  CLI::App* train = app.add_subcommand("train", "Train the transformer and write a checkpoint");
  train_flags.Attach(train);
  AddSetting(train, "--corpus", "corpus_root", train_flags.overrides, "Corpus root directory");
  AddSetting(train, "--pairs", "train.pairs", train_flags.overrides,
             "Supervision: gsg (gap sentences) or reference (human summaries)");
  AddSetting(train, "--steps", "train.steps", train_flags.overrides, "Adam steps");
  train->add_option("--out", train_out, "Checkpoint path")->required();
  train->add_option("--log-every", log_every, "Print the loss every N steps (0: never)");

  // summarize
  CommonFlags sum_flags;
  std::string sum_system;
  fs::path sum_model;
  fs::path sum_input;
  bool no_title = false;
  CLI::App* summarize = app.add_subcommand("summarize", "Summarize one article file");
  sum_flags.Attach(summarize);
  auto* system_opt = summarize->add_option("--system", sum_system, "tfidf, gsg, lead or random");
  auto* model_opt = summarize->add_option("--model", sum_model, "Transformer checkpoint");
  system_opt->excludes(model_opt);
  model_opt->excludes(system_opt);
  summarize->add_option("--input", sum_input, "Article file")->required()->check(CLI::ExistingFile);
  summarize->add_flag("--no-title", no_title, "The first line is body text, not a title");
  AddSetting(summarize, "--budget-ratio", "budget.ratio", sum_flags.overrides,
             "Summary length as a fraction of the sentences");
  AddSetting(summarize, "--budget-count", "budget.count", sum_flags.overrides,
             "Summary length in sentences");
  AddSetting(summarize, "--seed", "random.seed", sum_flags.overrides, "Seed for the random baseline");

  // report
  fs::path report_input;
  fs::path report_out;
  std::string report_format = "markdown";
  CLI::App* report = app.add_subcommand("report", "Render a CSV report as markdown");
  report->add_option("--input", report_input, "CSV report")->required()->check(CLI::ExistingFile);
  report->add_option("--format", report_format, "markdown or csv")
      ->check(CLI::IsMember({"csv", "markdown"}));
  report->add_option("--out", report_out, "Output file (default: standard output)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  try {
    if (*evaluate) return RunEvaluate(eval_flags, eval_format);
    if (*train) return RunTrain(train_flags, train_out, log_every);
    if (*summarize) {
      if (sum_system.empty() && sum_model.empty()) {
        throw Error(ErrorCode::kMissingRequired, "summarize needs --system or --model");
      }
      return RunSummarize(sum_flags, sum_system, sum_model, sum_input, no_title);
    }
    return RunReport(report_input, report_format, report_out);
  } catch (const Error& e) {
    std::cerr << "sumbench: " << e.what() << "\n";
    return e.kind() == ErrorKind::kConfig ? kExitConfig : kExitData;
  } catch (const std::exception& e) {
    std::cerr << "sumbench: " << e.what() << "\n";
    return kExitData;
  }
}
