// Copyright 2026 The weakgiant Authors
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

#include "weakgiant/error.hpp"

namespace weakgiant {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kNegativeIndex: return "NegativeIndex";
    case ErrorKind::kDuplicateKey: return "DuplicateKey";
    case ErrorKind::kNotNormalized: return "NotNormalized";
    case ErrorKind::kNonPositiveProbability: return "NonPositiveProbability";
    case ErrorKind::kZeroMeanDegree: return "ZeroMeanDegree";
    case ErrorKind::kEdgeImbalance: return "EdgeImbalance";
    case ErrorKind::kSupercritical: return "Supercritical";
    case ErrorKind::kNoConvergence: return "NoConvergence";
    case ErrorKind::kNegativeTime: return "NegativeTime";
    case ErrorKind::kConversionOutOfRange: return "ConversionOutOfRange";
    case ErrorKind::kInvalidBounds: return "InvalidBounds";
    case ErrorKind::kInvalidMixture: return "InvalidMixture";
    case ErrorKind::kNoReactivePair: return "NoReactivePair";
    case ErrorKind::kDegenerateMixture: return "DegenerateMixture";
    case ErrorKind::kInvalidArgument: return "InvalidArgument";
    case ErrorKind::kExhausted: return "Exhausted";
    case ErrorKind::kUnrealizable: return "Unrealizable";
    case ErrorKind::kParse: return "Parse";
  }
  return "Unknown";
}

}  // namespace weakgiant
