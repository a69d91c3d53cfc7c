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

#ifndef SWERKIT_ERROR_HPP
#define SWERKIT_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace swerkit {

enum class ErrorCode {
  EmptyReference,
  EmptyRatings,
  InvalidRating,
  InconsistentDimension,
  EmptyLexicon,
  DimensionMismatch,
  MalformedLine,
  DuplicateId,
  MissingReference,
  ConflictingAnnotation,
  NoEntities,
  DegenerateInput,
  MissingScore,
  EmptyCorpus,
  InvalidConfig,
  Io,
};

std::string_view to_string(ErrorCode code);

/// Every recoverable failure in the library is reported as an Error carrying
/// a stable code. The CLI prints these as `error: <code>: <detail>`.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string &detail)
      : std::runtime_error(detail), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace swerkit

#endif  // SWERKIT_ERROR_HPP
