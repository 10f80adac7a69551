// Copyright 2026 The flagsphere Authors
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

namespace flagsphere {

enum class ErrorCode {
  kParse,
  kNotASphere,
  kBadVertex,
  kNotAnEdge,
  kLinkConditionViolated,
  kNotFlag,
  kInternalMinimalityViolation,
  kBadSplitSpec,
  kBudgetTooSmall,
  kBudgetTooLarge,
  kTooLarge,
  kBadCertificate,
  kIo,
};

// Stable kebab-case name used in `ERR <code>: <detail>` lines.
std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(detail), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Reasons a face list fails to describe a triangulated 2-sphere.
enum class NotSphereReason {
  kBadIndex,
  kDuplicateFace,
  kEdgeDegree,
  kLinkNotCycle,
  kEulerFail,
  kDisconnected,
};

std::string_view reason_name(NotSphereReason reason);

class NotASphere : public Error {
 public:
  NotASphere(NotSphereReason reason, const std::string& detail)
      : Error(ErrorCode::kNotASphere,
              std::string(reason_name(reason)) + " (" + detail + ")"),
        reason_(reason) {}

  NotSphereReason reason() const noexcept { return reason_; }

 private:
  NotSphereReason reason_;
};

}  // namespace flagsphere
