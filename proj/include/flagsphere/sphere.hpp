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
#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace flagsphere {

using Vertex = std::uint32_t;

// Vertex triple; stored sorted ascending inside a Sphere.
using Face = std::array<Vertex, 3>;

// Unordered vertex pair, normalized so that lo < hi.
struct Edge {
  Vertex lo = 0;
  Vertex hi = 0;

  Edge() = default;
  // Throws Error(kNotAnEdge) when a == b.
  Edge(Vertex a, Vertex b);

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Immutable, validated triangulation of the 2-sphere.
//
// The face list is kept as sorted triples in sorted order, so two spheres
// compare equal exactly when they have the same labels and faces. All
// derived structure (edges, neighbor lists, normalized link cycles) is built
// once in from_faces().
class Sphere {
 public:
  // Validates the triangulation. Throws NotASphere with the first failed
  // invariant in this order: bad-index, duplicate-face, edge-degree≠2,
  // link-not-cycle, disconnected, euler-fail.
  static Sphere from_faces(std::size_t n_vertices, std::span<const Face> faces);

  std::size_t num_vertices() const noexcept { return neighbors_.size(); }
  std::size_t num_edges() const noexcept { return edges_.size(); }
  std::size_t num_faces() const noexcept { return faces_.size(); }

  const std::vector<Face>& faces() const noexcept { return faces_; }
  // Sorted lexicographically by (lo, hi).
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  // Sorted ascending. Throws Error(kBadVertex).
  std::span<const Vertex> neighbors(Vertex v) const;
  std::size_t degree(Vertex v) const { return neighbors(v).size(); }

  // Neighbors of v in cyclic order. The representative starts at the smallest
  // neighbor and continues toward the smaller of that neighbor's two cycle
  // neighbors. Throws Error(kBadVertex).
  std::span<const Vertex> link_cycle(Vertex v) const;

  bool adjacent(Vertex a, Vertex b) const;
  bool has_edge(Edge e) const { return adjacent(e.lo, e.hi); }
  bool has_face(Face f) const;

  // Throws Error(kNotAnEdge) if e is not an edge of this sphere.
  void require_edge(Edge e) const;

  // Third vertices of the two faces containing e, smaller first.
  std::pair<Vertex, Vertex> apexes(Edge e) const;

  friend bool operator==(const Sphere& a, const Sphere& b) {
    return a.num_vertices() == b.num_vertices() && a.faces_ == b.faces_;
  }

 private:
  Sphere() = default;

  std::vector<Face> faces_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> neighbors_;
  std::vector<std::vector<Vertex>> links_;
};

// Number of vertices of each degree: counts[k] = #{v : degree(v) = k}.
// Degree-k vertices are the k-gon facets of the dual simple polytope.
struct RVector {
  std::vector<std::size_t> counts;

  std::size_t operator[](std::size_t k) const {
    return k < counts.size() ? counts[k] : 0;
  }
  std::size_t max_degree() const {
    return counts.empty() ? 0 : counts.size() - 1;
  }
  std::size_t total() const;

  friend bool operator==(const RVector&, const RVector&) = default;
};

RVector r_vector(const Sphere& sphere);

Sphere tetrahedron();

// Opposite (non-adjacent) pairs are {0,5}, {1,4}, {2,3}.
Sphere octahedron();

// Applies new_label[old] to every face. new_label must be a permutation of
// 0..n-1; throws Error(kBadVertex) otherwise.
Sphere relabel(const Sphere& sphere, std::span<const Vertex> new_label);

}  // namespace flagsphere
