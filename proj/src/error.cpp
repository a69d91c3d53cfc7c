// Copyright 2026 The swerkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "swerkit/error.hpp"

namespace swerkit {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptyReference:
      return "EmptyReference";
    case ErrorCode::EmptyRatings:
      return "EmptyRatings";
    case ErrorCode::InvalidRating:
      return "InvalidRating";
    case ErrorCode::InconsistentDimension:
      return "InconsistentDimension";
    case ErrorCode::EmptyLexicon:
      return "EmptyLexicon";
    case ErrorCode::DimensionMismatch:
      return "DimensionMismatch";
    case ErrorCode::MalformedLine:
      return "MalformedLine";
    case ErrorCode::DuplicateId:
      return "DuplicateId";
    case ErrorCode::MissingReference:
      return "MissingReference";
    case ErrorCode::ConflictingAnnotation:
      return "ConflictingAnnotation";
    case ErrorCode::NoEntities:
      return "NoEntities";
    case ErrorCode::DegenerateInput:
      return "DegenerateInput";
    case ErrorCode::MissingScore:
      return "MissingScore";
    case ErrorCode::EmptyCorpus:
      return "EmptyCorpus";
    case ErrorCode::InvalidConfig:
      return "InvalidConfig";
    case ErrorCode::Io:
      return "Io";
  }
  return "Unknown";
}

}  // namespace swerkit
