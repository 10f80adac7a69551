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

#include "flagsphere/flagness.hpp"
#include "flagsphere/sphere.hpp"

// Brute-force reference implementations. These rely only on the Sphere
// accessors (plus split_vertex and, above 8 vertices, canonical forms for
// enumeration dedup) so they can check the fast paths independently.
namespace flagsphere::oracle {

// Literal definition: every clique of the edge graph spans a simplex.
bool brute_is_flag(const Sphere& sphere);

// Every 4-subset whose induced subcomplex is a chord-free 4-cycle with no
// face inside. Same normalization and order as belts().
std::vector<Belt> brute_belts(const Sphere& sphere);

// Vertex bijection search pruned by degrees. Spheres of different size are
// never isomorphic; equal sizes above 9 vertices throw Error(kTooLarge).
bool brute_isomorphic(const Sphere& a, const Sphere& b);

inline constexpr std::size_t kMaxBruteVertices = 9;
inline constexpr std::size_t kMaxEnumerationVertices = 11;

// One representative per isomorphism class of triangulated 2-spheres with
// 4 <= n <= max_n, grown from the tetrahedron by every vertex split, in
// order of n. Throws Error(kBudgetTooSmall) for max_n < 4 and
// Error(kBudgetTooLarge) for max_n > 11.
std::vector<Sphere> enumerate_all_spheres(std::size_t max_n,
                                          std::size_t jobs = 1);

}  // namespace flagsphere::oracle
