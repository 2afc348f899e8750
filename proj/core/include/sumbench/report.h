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

#pragma once

#include <string>
#include <string_view>

#include "sumbench/config.h"
#include "sumbench/experiment.h"

namespace sumbench::harness {

// Header "system,variant,precision,recall,f1", then one row per (system,
// variant) in table order, scores with 4 decimals.
std::string RenderCsv(const Report& report);

// A mean-F table (systems as rows, variants as columns), a precision/recall
// table, and a metadata list. Wall-clock time is never rendered.
std::string RenderMarkdown(const Report& report);

std::string RenderReport(const Report& report, OutputFormat format);

// Reads a CSV produced by RenderCsv back into a report without metadata.
// Throws kTypeError on malformed input.
Report ParseCsvReport(std::string_view csv);

}  // namespace sumbench::harness
