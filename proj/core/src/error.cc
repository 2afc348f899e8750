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

#include "sumbench/error.h"

namespace sumbench {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kMissingRoot: return "MissingRoot";
    case ErrorCode::kUnpairedDocument: return "UnpairedDocument";
    case ErrorCode::kEncodingError: return "EncodingError";
    case ErrorCode::kEmptyCorpus: return "EmptyCorpus";
    case ErrorCode::kEmptyDocument: return "EmptyDocument";
    case ErrorCode::kCorpusTooSmall: return "CorpusTooSmall";
    case ErrorCode::kNoTokens: return "NoTokens";
    case ErrorCode::kIdOutOfRange: return "IdOutOfRange";
    case ErrorCode::kEmptyPairList: return "EmptyPairList";
    case ErrorCode::kNoSentences: return "NoSentences";
    case ErrorCode::kBudgetInvalid: return "BudgetInvalid";
    case ErrorCode::kTooFewSentences: return "TooFewSentences";
    case ErrorCode::kNoUsablePairs: return "NoUsablePairs";
    case ErrorCode::kShapeMismatch: return "ShapeMismatch";
    case ErrorCode::kAllPadding: return "AllPadding";
    case ErrorCode::kNotScalar: return "NotScalar";
    case ErrorCode::kTapeEmpty: return "TapeEmpty";
    case ErrorCode::kMissingGrad: return "MissingGrad";
    case ErrorCode::kOddDimension: return "OddDimension";
    case ErrorCode::kFullyMaskedRow: return "FullyMaskedRow";
    case ErrorCode::kSequenceTooLong: return "SequenceTooLong";
    case ErrorCode::kEmptyTrainingSet: return "EmptyTrainingSet";
    case ErrorCode::kDivergedLoss: return "DivergedLoss";
    case ErrorCode::kBadMagic: return "BadMagic";
    case ErrorCode::kUnsupportedVersion: return "UnsupportedVersion";
    case ErrorCode::kTruncatedFile: return "TruncatedFile";
    case ErrorCode::kChecksumMismatch: return "ChecksumMismatch";
    case ErrorCode::kCorruptCheckpoint: return "CorruptCheckpoint";
    case ErrorCode::kUnknownKey: return "UnknownKey";
    case ErrorCode::kTypeError: return "TypeError";
    case ErrorCode::kMissingRequired: return "MissingRequired";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kIoError: return "IoError";
  }
  return "Unknown";
}

ErrorKind KindOf(ErrorCode code) {
  switch (code) {
    case ErrorCode::kUnknownKey:
    case ErrorCode::kTypeError:
    case ErrorCode::kMissingRequired:
    case ErrorCode::kInvalidArgument:
    case ErrorCode::kBudgetInvalid:
      return ErrorKind::kConfig;
    default:
      return ErrorKind::kData;
  }
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
      code_(code) {}

}  // namespace sumbench
