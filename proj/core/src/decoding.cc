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

#include "sumbench/decoding.h"

#include <algorithm>
#include <cmath>

#include "sumbench/error.h"

namespace sumbench::transformer {
namespace {

struct Hypothesis {
  std::vector<TokenId> tokens;  // generated tokens, BOS excluded
  double score = 0.0;           // summed log-probabilities
};

struct Candidate {
  std::size_t parent;
  TokenId token;
  double token_logprob;
  double score;
  double normalized;
};

double Normalize(double score, std::size_t length, double alpha) {
  return score / std::pow(static_cast<double>(length), alpha);
}

// Log-softmax of the last position of each row of [rows, len, V] logits.
std::vector<std::vector<double>> LastLogProbs(const tensor::Tensor& logits, std::size_t rows,
                                              std::size_t len, std::size_t vocab) {
  std::vector<std::vector<double>> out(rows, std::vector<double>(vocab));
  for (std::size_t r = 0; r < rows; ++r) {
    const double* row = logits.data().data() + (r * len + len - 1) * vocab;
    const double max = *std::max_element(row, row + vocab);
    double z = 0.0;
    for (std::size_t j = 0; j < vocab; ++j) z += std::exp(row[j] - max);
    const double log_z = max + std::log(z);
    for (std::size_t j = 0; j < vocab; ++j) out[r][j] = row[j] - log_z;
  }
  return out;
}

std::vector<TokenId> Greedy(const TransformerModel& model, const tensor::Tensor& memory,
                            std::span<const TokenId> src, std::size_t max_out) {
  const std::size_t vocab = model.config().vocab_size;
  std::vector<TokenId> prefix{Vocabulary::kBos};
  std::vector<TokenId> out;
  while (out.size() < max_out) {
    const tensor::Tensor logits = model.DecodeLogits(memory, src, src.size(), prefix, 1,
                                                     prefix.size(), false, nullptr);
    const auto logp = LastLogProbs(logits, 1, prefix.size(), vocab)[0];
    // max_element returns the first maximum, i.e. the smallest id.
    const TokenId next = static_cast<TokenId>(std::max_element(logp.begin(), logp.end()) - logp.begin());
    if (next == Vocabulary::kEos) break;
    out.push_back(next);
    prefix.push_back(next);
  }
  return out;
}

std::vector<TokenId> Beam(const TransformerModel& model, const tensor::Tensor& memory,
                          std::span<const TokenId> src, const DecodeOptions& options) {
  const std::size_t vocab = model.config().vocab_size;
  const double alpha = options.length_penalty;
  std::vector<Hypothesis> live{Hypothesis{}};
  std::vector<std::pair<double, std::vector<TokenId>>> finished;  // (normalized, tokens)

  for (std::size_t step = 0; step < options.max_out && !live.empty(); ++step) {
    const std::size_t len = step + 1;  // BOS + generated tokens
    std::vector<TokenId> inputs;
    inputs.reserve(live.size() * len);
    for (const auto& h : live) {
      inputs.push_back(Vocabulary::kBos);
      inputs.insert(inputs.end(), h.tokens.begin(), h.tokens.end());
    }
    const tensor::Tensor logits =
        model.DecodeLogits(memory, src, src.size(), inputs, live.size(), len, false, nullptr);
    const auto logp = LastLogProbs(logits, live.size(), len, vocab);

    std::vector<Candidate> candidates;
    candidates.reserve(live.size() * vocab);
    for (std::size_t p = 0; p < live.size(); ++p) {
      for (std::size_t t = 0; t < vocab; ++t) {
        const double score = live[p].score + logp[p][t];
        candidates.push_back(Candidate{p, static_cast<TokenId>(t), logp[p][t], score,
                                       Normalize(score, len, alpha)});
      }
    }
    const std::size_t keep = std::min(options.beam_width, candidates.size());
    std::partial_sort(candidates.begin(), candidates.begin() + static_cast<std::ptrdiff_t>(keep),
                      candidates.end(), [](const Candidate& a, const Candidate& b) {
                        if (a.normalized != b.normalized) return a.normalized > b.normalized;
                        if (a.parent != b.parent) return a.parent < b.parent;
                        if (a.token_logprob != b.token_logprob) return a.token_logprob > b.token_logprob;
                        return a.token < b.token;
                      });

    std::vector<Hypothesis> next;
    for (std::size_t i = 0; i < keep; ++i) {
      const Candidate& c = candidates[i];
      if (c.token == Vocabulary::kEos) {
        finished.emplace_back(c.normalized, live[c.parent].tokens);
        continue;
      }
      Hypothesis h = live[c.parent];
      h.tokens.push_back(c.token);
      h.score = c.score;
      next.push_back(std::move(h));
    }
    live = std::move(next);
  }
  for (const auto& h : live) {
    finished.emplace_back(Normalize(h.score, h.tokens.size(), alpha), h.tokens);
  }
  // First best in insertion order: earlier finish, then better rank.
  std::size_t best = 0;
  for (std::size_t i = 1; i < finished.size(); ++i) {
    if (finished[i].first > finished[best].first) best = i;
  }
  return finished.empty() ? std::vector<TokenId>{} : finished[best].second;
}

}  // namespace

std::string_view DecodeStrategyName(DecodeStrategy strategy) {
  return strategy == DecodeStrategy::kGreedy ? "greedy" : "beam";
}

DecodeStrategy ParseDecodeStrategy(std::string_view name) {
  if (name == "greedy") return DecodeStrategy::kGreedy;
  if (name == "beam") return DecodeStrategy::kBeam;
  throw Error(ErrorCode::kTypeError, "unknown decode strategy '" + std::string(name) + "'");
}

std::vector<TokenId> DecodeSummary(const TransformerModel& model, std::span<const TokenId> src,
                                   const DecodeOptions& options) {
  const std::size_t max_len = model.config().max_len;
  if (options.max_out > max_len) {
    throw Error(ErrorCode::kSequenceTooLong, "max_out " + std::to_string(options.max_out) +
                                                 " exceeds max_len " + std::to_string(max_len));
  }
  if (options.beam_width == 0) throw Error(ErrorCode::kInvalidArgument, "beam width must be >= 1");
  tensor::NoGradGuard no_grad;
  const tensor::Tensor memory = model.Encode(src, 1, src.size(), false, nullptr);
  if (options.strategy == DecodeStrategy::kGreedy || options.max_out == 0) {
    return Greedy(model, memory, src, options.max_out);
  }
  return Beam(model, memory, src, options);
}

}  // namespace sumbench::transformer
