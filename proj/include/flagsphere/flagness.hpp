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

#include <array>
#include <compare>
#include <vector>

#include "flagsphere/sphere.hpp"

namespace flagsphere {

// A 3-clique of the edge graph that is not a face.
struct MissingFace {
  std::array<Vertex, 3> vertices;  // sorted

  friend auto operator<=>(const MissingFace&, const MissingFace&) = default;
};

// Four vertices inducing exactly a chord-free 4-cycle.
struct Belt {
  // Cycle order: smallest vertex first, then its smaller cycle neighbor.
  std::array<Vertex, 4> cycle;

  std::array<Vertex, 4> vertices() const;  // sorted
  bool contains(Vertex v) const;

  friend auto operator<=>(const Belt&, const Belt&) = default;
};

// Builds the normalized belt for the cycle a-b-c-d-a.
Belt make_belt(Vertex a, Vertex b, Vertex c, Vertex d);

// Sorted list of triangles of the edge graph that are not faces.
std::vector<MissingFace> missing_triangles(const Sphere& sphere);

// A 2-sphere is flag iff it has no missing triangle and no degree-3 vertex
// (a degree-3 vertex with its link is a 4-clique that cannot be a simplex).
bool is_flag(const Sphere& sphere);

// Throws Error(kNotFlag) unless is_flag(sphere).
void require_flag(const Sphere& sphere);

// All belts, each once, sorted by cycle.
std::vector<Belt> belts(const Sphere& sphere);

// Throws Error(kNotAnEdge).
bool edge_in_belt(const Sphere& sphere, Edge e);

// Edges lying in no belt, in edge order.
std::vector<Edge> belt_free_edges(const Sphere& sphere);

}  // namespace flagsphere
