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

#include <string>
#include <string_view>
#include <vector>

#include "sumbench/resources.h"
#include "sumbench/textproc.h"

namespace sumbench::textproc {
namespace {

bool IsVowel(char c) { return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u'; }

// Candidate base forms for a regular inflection, most specific rule first.
std::vector<std::string> Candidates(std::string_view w) {
  std::vector<std::string> out;
  const auto stem = [&](std::size_t suffix_len) {
    return std::string(w.substr(0, w.size() - suffix_len));
  };
  const auto with_doubling_repair = [&](std::string base) {
    const std::size_t n = base.size();
    // A single consonant after a single vowel was not doubled, which points
    // at a dropped silent "e" (hoping -> hope, but hopping -> hop).
    const bool cvc = n >= 3 && !IsVowel(base[n - 1]) && IsVowel(base[n - 2]) &&
                     !IsVowel(base[n - 3]) && base[n - 1] != 'w' && base[n - 1] != 'x' &&
                     base[n - 1] != 'y';
    if (cvc) {
      out.push_back(base + "e");
      out.push_back(base);
    } else {
      out.push_back(base);
      out.push_back(base + "e");
    }
    if (n >= 2 && base[n - 1] == base[n - 2] && !IsVowel(base[n - 1])) {
      out.push_back(base.substr(0, n - 1));
    }
  };

  if (w.ends_with("ies") && w.size() > 3) out.push_back(stem(3) + "y");
  if (w.ends_with("ves") && w.size() > 3) {
    out.push_back(stem(3) + "f");
    out.push_back(stem(3) + "fe");
  }
  if (w.ends_with("es") && w.size() > 2) out.push_back(stem(2));
  if (w.ends_with("s") && !w.ends_with("ss") && w.size() > 1) out.push_back(stem(1));
  if (w.ends_with("ied") && w.size() > 3) out.push_back(stem(3) + "y");
  if (w.ends_with("ed") && w.size() > 2) with_doubling_repair(stem(2));
  if (w.ends_with("ing") && w.size() > 3) with_doubling_repair(stem(3));
  return out;
}

}  // namespace

std::string Lemmatize(std::string_view word) {
  const auto& exceptions = resources::LemmaExceptions();
  if (auto it = exceptions.find(std::string(word)); it != exceptions.end()) return it->second;

  const auto& words = resources::LemmaWords();
  if (words.count(std::string(word)) > 0) return std::string(word);
  for (auto& candidate : Candidates(word)) {
    if (candidate.size() >= 2 && words.count(candidate) > 0) return candidate;
  }
  return std::string(word);
}

}  // namespace sumbench::textproc
