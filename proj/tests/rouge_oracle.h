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

// Slow reference scorers that share no code with the library. Clipped
// overlap is counted by greedy position matching instead of count maps, and
// the LCS is a memoized prefix recursion (or subset enumeration for short
// inputs) instead of the rolling table.

#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace sumbench::oracle {

using Seq = std::vector<std::string>;

struct Prf {
  double p = 0.0;
  double r = 0.0;
  double f = 0.0;
};

inline Prf Combine(double hits, double cand_total, double ref_total) {
  Prf s;
  s.p = cand_total == 0.0 ? 0.0 : hits / cand_total;
  s.r = ref_total == 0.0 ? 0.0 : hits / ref_total;
  s.f = s.p + s.r == 0.0 ? 0.0 : 2.0 * s.p * s.r / (s.p + s.r);
  return s;
}

inline bool SameWindow(const Seq& a, std::size_t i, const Seq& b, std::size_t j, std::size_t n) {
  for (std::size_t k = 0; k < n; ++k) {
    if (a[i + k] != b[j + k]) return false;
  }
  return true;
}

// Each candidate window claims the first unclaimed identical reference window.
inline Prf RougeN(const Seq& cand, const Seq& ref, std::size_t n) {
  const std::size_t nc = cand.size() >= n ? cand.size() - n + 1 : 0;
  const std::size_t nr = ref.size() >= n ? ref.size() - n + 1 : 0;
  std::vector<bool> claimed(nr, false);
  double hits = 0.0;
  for (std::size_t i = 0; i < nc; ++i) {
    for (std::size_t j = 0; j < nr; ++j) {
      if (!claimed[j] && SameWindow(cand, i, ref, j, n)) {
        claimed[j] = true;
        hits += 1.0;
        break;
      }
    }
  }
  return Combine(hits, static_cast<double>(nc), static_cast<double>(nr));
}

inline std::size_t LcsMemo(const Seq& a, const Seq& b) {
  std::vector<std::vector<int>> memo(a.size() + 1, std::vector<int>(b.size() + 1, -1));
  std::function<int(std::size_t, std::size_t)> go = [&](std::size_t i, std::size_t j) -> int {
    if (i == a.size() || j == b.size()) return 0;
    int& m = memo[i][j];
    if (m >= 0) return m;
    if (a[i] == b[j]) {
      m = 1 + go(i + 1, j + 1);
    } else {
      m = std::max(go(i + 1, j), go(i, j + 1));
    }
    return m;
  };
  return static_cast<std::size_t>(go(0, 0));
}

inline bool IsSubsequence(const Seq& sub, const Seq& of) {
  std::size_t j = 0;
  for (std::size_t i = 0; i < of.size() && j < sub.size(); ++i) {
    if (of[i] == sub[j]) ++j;
  }
  return j == sub.size();
}

// Longest subsequence of `a` (by subset enumeration) that is also one of `b`.
inline std::size_t LcsEnumerate(const Seq& a, const Seq& b) {
  std::size_t best = 0;
  const std::size_t subsets = std::size_t{1} << a.size();
  for (std::size_t mask = 0; mask < subsets; ++mask) {
    Seq sub;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (mask & (std::size_t{1} << i)) sub.push_back(a[i]);
    }
    if (sub.size() > best && IsSubsequence(sub, b)) best = sub.size();
  }
  return best;
}

inline Prf RougeL(const Seq& cand, const Seq& ref, std::size_t lcs) {
  return Combine(static_cast<double>(lcs), static_cast<double>(cand.size()),
                 static_cast<double>(ref.size()));
}

}  // namespace sumbench::oracle
