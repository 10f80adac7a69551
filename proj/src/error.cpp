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

#include "flagsphere/error.hpp"

namespace flagsphere {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParse: return "parse-error";
    case ErrorCode::kNotASphere: return "not-a-sphere";
    case ErrorCode::kBadVertex: return "bad-vertex";
    case ErrorCode::kNotAnEdge: return "not-an-edge";
    case ErrorCode::kLinkConditionViolated: return "link-condition-violated";
    case ErrorCode::kNotFlag: return "not-flag";
    case ErrorCode::kInternalMinimalityViolation:
      return "internal-minimality-violation";
    case ErrorCode::kBadSplitSpec: return "bad-split-spec";
    case ErrorCode::kBudgetTooSmall: return "budget-too-small";
    case ErrorCode::kBudgetTooLarge: return "budget-too-large";
    case ErrorCode::kTooLarge: return "too-large";
    case ErrorCode::kBadCertificate: return "bad-certificate";
    case ErrorCode::kIo: return "io-error";
  }
  return "unknown";
}

std::string_view reason_name(NotSphereReason reason) {
  switch (reason) {
    case NotSphereReason::kBadIndex: return "bad-index";
    case NotSphereReason::kDuplicateFace: return "duplicate-face";
    case NotSphereReason::kEdgeDegree: return "edge-degree≠2";
    case NotSphereReason::kLinkNotCycle: return "link-not-cycle";
    case NotSphereReason::kEulerFail: return "euler-fail";
    case NotSphereReason::kDisconnected: return "disconnected";
  }
  return "unknown";
}

}  // namespace flagsphere
