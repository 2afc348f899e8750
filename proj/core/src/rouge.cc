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

#include "sumbench/rouge.h"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "sumbench/error.h"

namespace sumbench::rouge {

RougeScore RougeScore::FromPrecisionRecall(double precision, double recall) {
  RougeScore s;
  s.precision = precision;
  s.recall = recall;
  s.f1 = (precision + recall) > 0.0 ? 2.0 * precision * recall / (precision + recall) : 0.0;
  return s;
}

RougeScore RougeScore::FromCounts(double overlap, double candidate_total,
                                  double reference_total) {
  const double p = candidate_total > 0.0 ? overlap / candidate_total : 0.0;
  const double r = reference_total > 0.0 ? overlap / reference_total : 0.0;
  return FromPrecisionRecall(p, r);
}

RougeVariant RougeVariant::N(int order) {
  if (order < 1) throw Error(ErrorCode::kInvalidArgument, "ROUGE-N order must be >= 1");
  return RougeVariant(order);
}

RougeVariant RougeVariant::Parse(std::string_view text) {
  std::string s(text);
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  std::string_view body = s;
  if (body.starts_with("ROUGE-")) body.remove_prefix(6);
  if (body == "L") return L();
  int order = 0;
  auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), order);
  if (ec != std::errc() || ptr != body.data() + body.size() || order < 1) {
    throw Error(ErrorCode::kTypeError, "unknown ROUGE variant '" + std::string(text) + "'");
  }
  return N(order);
}

std::string RougeVariant::Name() const {
  return is_lcs() ? "ROUGE-L" : "ROUGE-" + std::to_string(order_);
}

NgramCounts ExtractNgrams(const Tokens& tokens, int n) {
  if (n < 1) throw Error(ErrorCode::kInvalidArgument, "n-gram order must be >= 1");
  NgramCounts counts;
  const std::size_t order = static_cast<std::size_t>(n);
  if (tokens.size() < order) return counts;
  for (std::size_t i = 0; i + order <= tokens.size(); ++i) {
    ++counts[Ngram(tokens.begin() + static_cast<std::ptrdiff_t>(i),
                   tokens.begin() + static_cast<std::ptrdiff_t>(i + order))];
  }
  return counts;
}

RougeScore RougeN(const Tokens& candidate, const Tokens& reference, int n) {
  const NgramCounts cand = ExtractNgrams(candidate, n);
  const NgramCounts ref = ExtractNgrams(reference, n);
  const std::size_t order = static_cast<std::size_t>(n);
  const double cand_total = candidate.size() >= order ? double(candidate.size() - order + 1) : 0.0;
  const double ref_total = reference.size() >= order ? double(reference.size() - order + 1) : 0.0;

  // Both maps are sorted; merge-join them.
  long overlap = 0;
  auto c = cand.begin();
  auto r = ref.begin();
  while (c != cand.end() && r != ref.end()) {
    if (c->first < r->first) {
      ++c;
    } else if (r->first < c->first) {
      ++r;
    } else {
      overlap += std::min(c->second, r->second);
      ++c;
      ++r;
    }
  }
  return RougeScore::FromCounts(static_cast<double>(overlap), cand_total, ref_total);
}

std::size_t LcsLength(const Tokens& a, const Tokens& b) {
  const Tokens& rows = a.size() >= b.size() ? a : b;
  const Tokens& cols = a.size() >= b.size() ? b : a;
  std::vector<std::size_t> prev(cols.size() + 1, 0);
  std::vector<std::size_t> curr(cols.size() + 1, 0);
  for (const auto& x : rows) {
    for (std::size_t j = 1; j <= cols.size(); ++j) {
      curr[j] = x == cols[j - 1] ? prev[j - 1] + 1 : std::max(prev[j], curr[j - 1]);
    }
    std::swap(prev, curr);
  }
  return prev[cols.size()];
}

RougeScore RougeL(const Tokens& candidate, const Tokens& reference) {
  const double lcs = static_cast<double>(LcsLength(candidate, reference));
  return RougeScore::FromCounts(lcs, static_cast<double>(candidate.size()),
                                static_cast<double>(reference.size()));
}

RougeScore Score(const Tokens& candidate, const Tokens& reference, RougeVariant variant) {
  return variant.is_lcs() ? RougeL(candidate, reference)
                          : RougeN(candidate, reference, variant.order());
}

std::map<RougeVariant, RougeScore> EvaluatePairs(std::span<const TokenPair> pairs,
                                                 std::span<const RougeVariant> variants) {
  if (pairs.empty()) throw Error(ErrorCode::kEmptyPairList, "no candidate/reference pairs");
  std::map<RougeVariant, RougeScore> means;
  const double count = static_cast<double>(pairs.size());
  for (RougeVariant variant : variants) {
    if (means.count(variant) > 0) continue;
    double p = 0.0, r = 0.0, f = 0.0;
    for (const auto& [candidate, reference] : pairs) {
      const RougeScore s = Score(candidate, reference, variant);
      p += s.precision;
      r += s.recall;
      f += s.f1;
    }
    means[variant] = RougeScore{p / count, r / count, f / count};
  }
  return means;
}

const RougeScore& ScoreTable::at(const std::string& system, RougeVariant variant) const {
  return rows.at(system).at(variant);
}

}  // namespace sumbench::rouge
