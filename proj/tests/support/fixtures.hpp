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
#include <random>
#include <vector>

#include "flagsphere/sphere.hpp"

namespace flagsphere::testing {

// Octahedron with vertex 0 split along {1,4}, written out face by face.
Sphere s7();
Sphere bipyramid();

// All spheres with n <= max_n (max_n <= 10) from the brute-force
// enumeration, computed once per process.
const std::vector<Sphere>& corpus(std::size_t max_n);
std::vector<Sphere> flag_corpus(std::size_t max_n);

std::vector<Vertex> random_permutation(std::size_t n, std::mt19937& rng);

}  // namespace flagsphere::testing
