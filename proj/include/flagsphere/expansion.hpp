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

#include <cstddef>
#include <vector>

#include "flagsphere/sphere.hpp"

namespace flagsphere {

// Split of vertex w along the chord {a, b} of its link cycle. Primal form of
// cutting the dual k-gon facet of w into two facets.
struct SplitSpec {
  Vertex w = 0;
  Vertex a = 0;
  Vertex b = 0;

  friend bool operator==(const SplitSpec&, const SplitSpec&) = default;
};

// Replaces w by adjacent vertices w (keeping its label) and n (new label).
// With a before b in the normalized link cycle of w, w keeps the arc a..b in
// cycle direction and n takes the arc b..a; both become adjacent to a and b.
// Throws Error(kBadSplitSpec) if w is out of range, a == b, or either is not
// on the link of w.
Sphere split_vertex(const Sphere& sphere, SplitSpec spec);

// a and b are consecutive on the link cycle of w (the split then creates a
// degree-3 vertex).
bool is_adjacent_split(const Sphere& sphere, SplitSpec spec);

struct Expansion {
  SplitSpec spec;
  Sphere sphere;
};

// Every split along a non-adjacent pair of link vertices, ordered by w and
// then by cycle positions. Throws Error(kNotFlag).
std::vector<Expansion> flag_expansions(const Sphere& sphere);

// Every split along any pair of distinct link vertices.
std::vector<Expansion> all_splits(const Sphere& sphere);

// Number of diagonals of a k-gon, k(k-3)/2; zero for k < 3.
std::size_t diagonal_count(std::size_t k);

// Sum over k of r_k * k(k-3)/2.
std::size_t expansion_bound(const Sphere& sphere);

}  // namespace flagsphere
