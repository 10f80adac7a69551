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

#include "fixtures.hpp"

#include <algorithm>
#include <array>
#include <mutex>
#include <numeric>

#include "flagsphere/flagness.hpp"
#include "flagsphere/oracle.hpp"

namespace flagsphere::testing {

Sphere s7() {
  const std::array<Face, 10> faces{{{0, 1, 2},
                                    {0, 2, 4},
                                    {6, 4, 3},
                                    {6, 3, 1},
                                    {0, 6, 1},
                                    {0, 6, 4},
                                    {5, 1, 2},
                                    {5, 2, 4},
                                    {5, 4, 3},
                                    {5, 3, 1}}};
  return Sphere::from_faces(7, faces);
}

Sphere bipyramid() {
  const std::array<Face, 6> faces{
      {{0, 1, 2}, {0, 2, 3}, {0, 1, 3}, {4, 1, 2}, {4, 2, 3}, {4, 1, 3}}};
  return Sphere::from_faces(5, faces);
}

const std::vector<Sphere>& corpus(std::size_t max_n) {
  static std::once_flag once;
  static std::vector<Sphere> all;
  std::call_once(once, [] { all = oracle::enumerate_all_spheres(10); });
  static std::array<std::vector<Sphere>, 11> by_budget;
  static std::mutex mutex;
  std::lock_guard lock(mutex);
  auto& slot = by_budget.at(max_n);
  if (slot.empty()) {
    for (const Sphere& s : all) {
      if (s.num_vertices() <= max_n) slot.push_back(s);
    }
  }
  return slot;
}

std::vector<Sphere> flag_corpus(std::size_t max_n) {
  std::vector<Sphere> out;
  for (const Sphere& s : corpus(max_n)) {
    if (is_flag(s)) out.push_back(s);
  }
  return out;
}

std::vector<Vertex> random_permutation(std::size_t n, std::mt19937& rng) {
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), Vertex{0});
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

}  // namespace flagsphere::testing
