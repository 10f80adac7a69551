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

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "flagsphere/sphere.hpp"

namespace flagsphere {

// Byte string identifying the isomorphism class of a triangulated 2-sphere.
// Mirror images share a form.
class CanonicalForm {
 public:
  CanonicalForm() = default;
  explicit CanonicalForm(std::string bytes) : bytes_(std::move(bytes)) {}

  const std::string& bytes() const noexcept { return bytes_; }

  // Lowercase hex, two characters per byte.
  std::string to_hex() const;
  // Throws Error(kParse) on odd length or non-hex characters.
  static CanonicalForm from_hex(std::string_view hex);

  friend auto operator<=>(const CanonicalForm&,
                          const CanonicalForm&) = default;

 private:
  std::string bytes_;
};

struct CanonicalLabeling {
  CanonicalForm form;
  std::vector<Vertex> new_label;  // new_label[old]
};

// Minimum over every directed edge (v, w) and both rotation directions of
// the breadth-first relabeling that starts at v and scans each vertex's
// rotation from the neighbor it was reached by. The form encodes the
// relabeled, sorted face list as varints: n, face count, then 3 labels per
// face.
CanonicalLabeling canonical_labeling(const Sphere& sphere);

CanonicalForm canonical_form(const Sphere& sphere);

// The sphere relabeled by its canonical labeling; equal for isomorphic
// inputs.
Sphere canonical_sphere(const Sphere& sphere);

bool isomorphic(const Sphere& a, const Sphere& b);

// Form restricted to a single rotation direction. The orientation is the
// one induced by the first stored face (reversed flips it). Distinguishes
// a chiral sphere from its mirror image; canonical_form is the minimum of
// the two.
CanonicalForm oriented_form(const Sphere& sphere, bool reversed);

}  // namespace flagsphere

template <>
struct std::hash<flagsphere::CanonicalForm> {
  std::size_t operator()(const flagsphere::CanonicalForm& f) const noexcept {
    return std::hash<std::string>{}(f.bytes());
  }
};
