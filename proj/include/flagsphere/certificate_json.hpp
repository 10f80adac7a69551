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

#include <string>
#include <string_view>

#include "flagsphere/contraction.hpp"

namespace flagsphere {

// {"format": "flagsphere-certificate", "version": 1,
//  "start": {"n": V, "faces": [[a, b, c], ...]},
//  "steps": [{"edge": [u, v], "relabel": [...]}, ...],
//  "end": {"n": V, "faces": [...]}}
std::string certificate_to_json(const ContractionCertificate& cert);

// Structural parse only; use verify_certificate() for the replay. Throws
// Error(kBadCertificate) on malformed documents and NotASphere when start or
// end fail validation.
ContractionCertificate certificate_from_json(std::string_view text);

}  // namespace flagsphere
