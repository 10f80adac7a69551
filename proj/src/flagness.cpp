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

#include "flagsphere/flagness.hpp"

#include <algorithm>
#include <iterator>

#include "flagsphere/error.hpp"

namespace flagsphere {

std::array<Vertex, 4> Belt::vertices() const {
  auto v = cycle;
  std::sort(v.begin(), v.end());
  return v;
}

bool Belt::contains(Vertex v) const {
  return std::find(cycle.begin(), cycle.end(), v) != cycle.end();
}

Belt make_belt(Vertex a, Vertex b, Vertex c, Vertex d) {
  std::array<Vertex, 4> cyc{a, b, c, d};
  auto min_it = std::min_element(cyc.begin(), cyc.end());
  std::rotate(cyc.begin(), min_it, cyc.end());
  if (cyc[3] < cyc[1]) std::swap(cyc[1], cyc[3]);
  return Belt{cyc};
}

std::vector<MissingFace> missing_triangles(const Sphere& sphere) {
  std::vector<MissingFace> out;
  for (const Edge& e : sphere.edges()) {
    auto na = sphere.neighbors(e.lo);
    auto nb = sphere.neighbors(e.hi);
    std::vector<Vertex> common;
    std::set_intersection(na.begin(), na.end(), nb.begin(), nb.end(),
                          std::back_inserter(common));
    for (Vertex c : common) {
      if (c <= e.hi) continue;  // report each triangle from its lowest edge
      if (!sphere.has_face({e.lo, e.hi, c})) {
        out.push_back(MissingFace{{e.lo, e.hi, c}});
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_flag(const Sphere& sphere) {
  for (Vertex v = 0; v < sphere.num_vertices(); ++v) {
    if (sphere.degree(v) < 4) return false;
  }
  return missing_triangles(sphere).empty();
}

void require_flag(const Sphere& sphere) {
  if (!is_flag(sphere)) {
    throw Error(ErrorCode::kNotFlag, "sphere with " +
                                         std::to_string(sphere.num_vertices()) +
                                         " vertices is not flag");
  }
}

std::vector<Belt> belts(const Sphere& sphere) {
  // Every belt a-b-c-d has two diagonals {a,c} and {b,d}, both non-edges;
  // enumerate from each non-adjacent pair and its non-adjacent common
  // neighbors, then deduplicate.
  std::vector<Belt> out;
  const auto n = static_cast<Vertex>(sphere.num_vertices());
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex c = a + 1; c < n; ++c) {
      if (sphere.adjacent(a, c)) continue;
      auto na = sphere.neighbors(a);
      auto nc = sphere.neighbors(c);
      std::vector<Vertex> common;
      std::set_intersection(na.begin(), na.end(), nc.begin(), nc.end(),
                            std::back_inserter(common));
      for (std::size_t i = 0; i < common.size(); ++i) {
        for (std::size_t j = i + 1; j < common.size(); ++j) {
          if (!sphere.adjacent(common[i], common[j])) {
            out.push_back(make_belt(a, common[i], c, common[j]));
          }
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool edge_in_belt(const Sphere& sphere, Edge e) {
  sphere.require_edge(e);
  // A belt through u-v continues u-v-x-y-u with x ~ v, y ~ u, x ~ y, and
  // both diagonals {u,x}, {v,y} missing.
  for (Vertex x : sphere.neighbors(e.hi)) {
    if (x == e.lo || sphere.adjacent(e.lo, x)) continue;
    for (Vertex y : sphere.neighbors(e.lo)) {
      if (y == e.hi || y == x || sphere.adjacent(e.hi, y)) continue;
      if (sphere.adjacent(x, y)) return true;
    }
  }
  return false;
}

std::vector<Edge> belt_free_edges(const Sphere& sphere) {
  std::vector<Edge> out;
  for (const Edge& e : sphere.edges()) {
    if (!edge_in_belt(sphere, e)) out.push_back(e);
  }
  return out;
}

}  // namespace flagsphere
