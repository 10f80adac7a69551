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
#include <vector>

#include "flagsphere/sphere.hpp"

namespace flagsphere {

// Surface link condition lk(u) ∩ lk(v) = lk(e): the common neighbors of the
// endpoints are exactly the apexes of the two faces on e, and the two links
// do not share the edge between those apexes (which only happens on the
// tetrahedron). Equivalent to K/e being a simplicial sphere.
// Throws Error(kNotAnEdge).
bool link_condition(const Sphere& sphere, Edge e);

struct Contraction {
  Sphere sphere;
  // relabel[old] = label in `sphere`. Both endpoints map to the same label:
  // the merged vertex takes min(endpoints), then labels are compacted.
  std::vector<Vertex> relabel;
};

// K/e. Throws Error(kNotAnEdge) or Error(kLinkConditionViolated).
Contraction contract(const Sphere& sphere, Edge e);

// For flag K: K/e is flag iff e lies in no belt.
// Throws Error(kNotFlag) or Error(kNotAnEdge).
bool is_flag_contractible(const Sphere& sphere, Edge e);

// Flag sphere with every edge in some belt. Throws Error(kNotFlag).
bool is_minimal(const Sphere& sphere);

// Vertices of degree 4 whose link has no chord.
std::vector<Vertex> square_link_vertices(const Sphere& sphere);

struct ContractionStep {
  Edge edge;                   // in the labeling before the step
  std::vector<Vertex> relabel;  // applied by the step

  friend bool operator==(const ContractionStep&,
                         const ContractionStep&) = default;
};

struct ContractionCertificate {
  Sphere start;
  std::vector<ContractionStep> steps;
  Sphere end;

  friend bool operator==(const ContractionCertificate&,
                         const ContractionCertificate&) = default;
};

// Greedy reduction: repeatedly contracts the lexicographically first
// flag-contractible edge until the octahedron is reached. Throws
// Error(kNotFlag), or Error(kInternalMinimalityViolation) if a flag sphere
// other than the octahedron has no contractible edge.
ContractionCertificate reduce_to_octahedron(const Sphere& sphere);

struct CertificateCheck {
  bool ok = false;
  std::string diagnostic;  // first failure; empty when ok

  explicit operator bool() const noexcept { return ok; }
};

// Replays the certificate, re-checking flagness and belt-freeness at every
// step with the brute-force predicates.
CertificateCheck verify_certificate(const ContractionCertificate& cert);

}  // namespace flagsphere
