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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sumbench/textproc.h"

namespace sumbench::rouge {

using textproc::Tokens;

struct RougeScore {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;

  // F1 is the harmonic mean, or 0 when precision + recall is 0.
  static RougeScore FromPrecisionRecall(double precision, double recall);
  // Overlap over candidate/reference totals; a zero denominator yields 0.
  static RougeScore FromCounts(double overlap, double candidate_total, double reference_total);

  bool operator==(const RougeScore&) const = default;
};

// ROUGE-N for some order n >= 1, or ROUGE-L. Orders sort before L, so maps
// keyed on variants iterate as ROUGE-1, ROUGE-2, ..., ROUGE-L.
class RougeVariant {
 public:
  static RougeVariant N(int order);
  static RougeVariant L() { return RougeVariant(0); }
  // Accepts "1", "2", "L", "ROUGE-1", "rouge-l", ... Throws kTypeError.
  static RougeVariant Parse(std::string_view text);

  bool is_lcs() const { return order_ == 0; }
  int order() const { return order_; }
  std::string Name() const;

  auto operator<=>(const RougeVariant& other) const {
    const int a = is_lcs() ? INT32_MAX : order_;
    const int b = other.is_lcs() ? INT32_MAX : other.order_;
    return a <=> b;
  }
  bool operator==(const RougeVariant&) const = default;

 private:
  explicit RougeVariant(int order) : order_(order) {}
  int order_;  // 0 encodes L
};

using Ngram = std::vector<std::string>;
using NgramCounts = std::map<Ngram, int>;

// All max(0, len - n + 1) contiguous n-grams with multiplicity.
NgramCounts ExtractNgrams(const Tokens& tokens, int n);

// Clipped n-gram overlap: sum over n-gram types of min(candidate, reference).
RougeScore RougeN(const Tokens& candidate, const Tokens& reference, int n);

// Exact longest common subsequence length, O(|a||b|) time, O(min) memory.
std::size_t LcsLength(const Tokens& a, const Tokens& b);

// Whole-sequence LCS, beta = 1.
RougeScore RougeL(const Tokens& candidate, const Tokens& reference);

RougeScore Score(const Tokens& candidate, const Tokens& reference, RougeVariant variant);

using TokenPair = std::pair<Tokens, Tokens>;  // (candidate, reference)

// Unweighted mean over pairs, separately for P, R and F. Throws kEmptyPairList.
std::map<RougeVariant, RougeScore> EvaluatePairs(std::span<const TokenPair> pairs,
                                                 std::span<const RougeVariant> variants);

// Mean scores per system, in the shape of a model-comparison table.
struct ScoreTable {
  std::vector<std::string> systems;  // row order
  std::vector<RougeVariant> variants;  // column order, sorted
  std::map<std::string, std::map<RougeVariant, RougeScore>> rows;
  std::size_t pair_count = 0;

  const RougeScore& at(const std::string& system, RougeVariant variant) const;
};

}  // namespace sumbench::rouge
