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

#include <stdexcept>
#include <string>
#include <string_view>

namespace sumbench {

enum class ErrorCode {
  // corpus
  kMissingRoot,
  kUnpairedDocument,
  kEncodingError,
  kEmptyCorpus,
  kEmptyDocument,
  kCorpusTooSmall,
  // textproc / vocabulary
  kNoTokens,
  kIdOutOfRange,
  // rouge
  kEmptyPairList,
  // extractive
  kNoSentences,
  kBudgetInvalid,
  kTooFewSentences,
  kNoUsablePairs,
  // tensor
  kShapeMismatch,
  kAllPadding,
  kNotScalar,
  kTapeEmpty,
  kMissingGrad,
  // transformer
  kOddDimension,
  kFullyMaskedRow,
  kSequenceTooLong,
  kEmptyTrainingSet,
  kDivergedLoss,
  // checkpoint
  kBadMagic,
  kUnsupportedVersion,
  kTruncatedFile,
  kChecksumMismatch,
  kCorruptCheckpoint,
  // configuration
  kUnknownKey,
  kTypeError,
  kMissingRequired,
  kInvalidArgument,
  kIoError,
};

// Coarse grouping used by the CLI to pick an exit code.
enum class ErrorKind { kConfig, kData };

std::string_view ErrorCodeName(ErrorCode code);
ErrorKind KindOf(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }
  ErrorKind kind() const noexcept { return KindOf(code_); }

 private:
  ErrorCode code_;
};

}  // namespace sumbench
