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

#include "sumbench/report.h"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <sstream>

#include "sumbench/error.h"

namespace sumbench::harness {
namespace {

constexpr std::string_view kCsvHeader = "system,variant,precision,recall,f1";

std::string Fixed4(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4f", v);
  return buf;
}

std::string Num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%g", v);
  return buf;
}

}  // namespace

std::string RenderCsv(const Report& report) {
  const rouge::ScoreTable& t = report.table;
  std::string out(kCsvHeader);
  out += '\n';
  for (const auto& system : t.systems) {
    for (const auto& variant : t.variants) {
      const rouge::RougeScore& s = t.at(system, variant);
      out += system + "," + variant.Name() + "," + Fixed4(s.precision) + "," + Fixed4(s.recall) +
             "," + Fixed4(s.f1) + "\n";
    }
  }
  return out;
}

std::string RenderMarkdown(const Report& report) {
  const rouge::ScoreTable& t = report.table;
  const ReportMetadata& m = report.metadata;
  std::ostringstream out;
  out << "## Mean ROUGE F1\n\n| System |";
  for (const auto& v : t.variants) out << ' ' << v.Name() << " |";
  out << "\n|---|";
  for (std::size_t i = 0; i < t.variants.size(); ++i) out << "---:|";
  out << '\n';
  for (const auto& system : t.systems) {
    out << "| " << system << " |";
    for (const auto& v : t.variants) out << ' ' << Fixed4(t.at(system, v).f1) << " |";
    out << '\n';
  }

  out << "\n### Precision / Recall\n\n| System |";
  for (const auto& v : t.variants) out << ' ' << v.Name() << " P | " << v.Name() << " R |";
  out << "\n|---|";
  for (std::size_t i = 0; i < t.variants.size(); ++i) out << "---:|---:|";
  out << '\n';
  for (const auto& system : t.systems) {
    out << "| " << system << " |";
    for (const auto& v : t.variants) {
      const auto& s = t.at(system, v);
      out << ' ' << Fixed4(s.precision) << " | " << Fixed4(s.recall) << " |";
    }
    out << '\n';
  }

  if (!m.config_digest.empty()) {
    out << "\n### Run\n\n";
    out << "- documents evaluated: " << t.pair_count << '\n';
    out << "- corpus: " << m.corpus_documents << " documents in " << m.corpus_categories
        << " categories\n";
    out << "- evaluation subset: " << m.eval_subset << " (" << m.evaluated_documents
        << " documents; split fraction " << Num(m.train_fraction) << ", split seed " << m.split_seed
        << ")\n";
    out << "- sentence budget: " << m.budget
        << " for every system; transformer output cut to the lead summary's token count\n";
    out << "- random baseline seed: " << m.random_seed << '\n';
    out << "- skipped documents:";
    for (const auto& system : t.systems) {
      const auto it = m.skipped.find(system);
      out << ' ' << system << '=' << (it == m.skipped.end() ? 0 : it->second);
    }
    out << '\n';
    out << "- config digest: " << m.config_digest << '\n';
  }
  return out.str();
}

std::string RenderReport(const Report& report, OutputFormat format) {
  return format == OutputFormat::kCsv ? RenderCsv(report) : RenderMarkdown(report);
}

Report ParseCsvReport(std::string_view csv) {
  std::istringstream in{std::string(csv)};
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader) {
    throw Error(ErrorCode::kTypeError, "report CSV must start with '" + std::string(kCsvHeader) + "'");
  }
  Report report;
  rouge::ScoreTable& t = report.table;
  int number = 1;
  while (std::getline(in, line)) {
    ++number;
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::stringstream row(line);
    std::string cell;
    while (std::getline(row, cell, ',')) cells.push_back(cell);
    if (cells.size() != 5) {
      throw Error(ErrorCode::kTypeError, "report CSV line " + std::to_string(number) + " needs 5 cells");
    }
    double values[3];
    for (int i = 0; i < 3; ++i) {
      const std::string& c = cells[static_cast<std::size_t>(i) + 2];
      auto [ptr, ec] = std::from_chars(c.data(), c.data() + c.size(), values[i]);
      if (ec != std::errc() || ptr != c.data() + c.size()) {
        throw Error(ErrorCode::kTypeError, "report CSV line " + std::to_string(number) + ": bad number '" + c + "'");
      }
    }
    const rouge::RougeVariant variant = rouge::RougeVariant::Parse(cells[1]);
    if (std::find(t.systems.begin(), t.systems.end(), cells[0]) == t.systems.end()) {
      t.systems.push_back(cells[0]);
    }
    if (std::find(t.variants.begin(), t.variants.end(), variant) == t.variants.end()) {
      t.variants.push_back(variant);
    }
    t.rows[cells[0]][variant] = rouge::RougeScore{values[0], values[1], values[2]};
  }
  if (t.systems.empty()) throw Error(ErrorCode::kTypeError, "report CSV has no data rows");
  std::sort(t.variants.begin(), t.variants.end());
  for (const auto& system : t.systems) {
    for (const auto& v : t.variants) {
      if (!t.rows[system].count(v)) {
        throw Error(ErrorCode::kTypeError, "report CSV lacks " + v.Name() + " for " + system);
      }
    }
  }
  return report;
}

}  // namespace sumbench::harness
