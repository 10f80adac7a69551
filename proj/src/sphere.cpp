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

#include "flagsphere/sphere.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "flagsphere/error.hpp"

namespace flagsphere {
namespace {

std::string face_str(const Face& f) {
  return "{" + std::to_string(f[0]) + "," + std::to_string(f[1]) + "," +
         std::to_string(f[2]) + "}";
}

std::string edge_str(const Edge& e) {
  return "{" + std::to_string(e.lo) + "," + std::to_string(e.hi) + "}";
}

// Orders a closed cycle so it starts at its minimum and walks toward the
// smaller of the minimum's two neighbors.
void normalize_cycle(std::vector<Vertex>& cycle) {
  auto min_it = std::min_element(cycle.begin(), cycle.end());
  std::rotate(cycle.begin(), min_it, cycle.end());
  if (cycle.size() > 2 && cycle.back() < cycle[1]) {
    std::reverse(cycle.begin() + 1, cycle.end());
  }
}

}  // namespace

Edge::Edge(Vertex a, Vertex b) : lo(std::min(a, b)), hi(std::max(a, b)) {
  if (a == b) {
    throw Error(ErrorCode::kNotAnEdge,
                "degenerate edge {" + std::to_string(a) + "," +
                    std::to_string(b) + "}");
  }
}

Sphere Sphere::from_faces(std::size_t n, std::span<const Face> input) {
  Sphere s;
  s.faces_.reserve(input.size());
  for (Face f : input) {
    std::sort(f.begin(), f.end());
    if (f[2] >= n) {
      throw NotASphere(NotSphereReason::kBadIndex,
                       "face " + face_str(f) + " has index >= " +
                           std::to_string(n));
    }
    if (f[0] == f[1] || f[1] == f[2]) {
      throw NotASphere(NotSphereReason::kBadIndex,
                       "face " + face_str(f) + " repeats a vertex");
    }
    s.faces_.push_back(f);
  }
  std::sort(s.faces_.begin(), s.faces_.end());
  if (auto dup = std::adjacent_find(s.faces_.begin(), s.faces_.end());
      dup != s.faces_.end()) {
    throw NotASphere(NotSphereReason::kDuplicateFace,
                     "face " + face_str(*dup) + " listed twice");
  }

  std::vector<std::size_t> used(n, 0);
  for (const Face& f : s.faces_) {
    for (Vertex v : f) ++used[v];
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (used[v] == 0) {
      throw NotASphere(NotSphereReason::kBadIndex,
                       "vertex " + std::to_string(v) + " lies in no face");
    }
  }

  std::vector<Edge> incidences;
  incidences.reserve(3 * s.faces_.size());
  for (const Face& f : s.faces_) {
    incidences.emplace_back(f[0], f[1]);
    incidences.emplace_back(f[0], f[2]);
    incidences.emplace_back(f[1], f[2]);
  }
  std::sort(incidences.begin(), incidences.end());
  for (std::size_t i = 0; i < incidences.size();) {
    std::size_t j = i;
    while (j < incidences.size() && incidences[j] == incidences[i]) ++j;
    if (j - i != 2) {
      throw NotASphere(NotSphereReason::kEdgeDegree,
                       "edge " + edge_str(incidences[i]) + " lies in " +
                           std::to_string(j - i) + " face(s)");
    }
    s.edges_.push_back(incidences[i]);
    i = j;
  }

  s.neighbors_.assign(n, {});
  for (const Edge& e : s.edges_) {
    s.neighbors_[e.lo].push_back(e.hi);
    s.neighbors_[e.hi].push_back(e.lo);
  }
  for (auto& nbrs : s.neighbors_) std::sort(nbrs.begin(), nbrs.end());

  // Each link is a 2-regular graph on the neighbors (every edge has two
  // faces); it must be one cycle.
  std::vector<std::vector<std::pair<Vertex, Vertex>>> link_edges(n);
  for (const Face& f : s.faces_) {
    link_edges[f[0]].emplace_back(f[1], f[2]);
    link_edges[f[1]].emplace_back(f[0], f[2]);
    link_edges[f[2]].emplace_back(f[0], f[1]);
  }
  s.links_.assign(n, {});
  for (std::size_t v = 0; v < n; ++v) {
    const auto& nbrs = s.neighbors_[v];
    auto index_of = [&](Vertex x) {
      return static_cast<std::size_t>(
          std::lower_bound(nbrs.begin(), nbrs.end(), x) - nbrs.begin());
    };
    std::vector<std::array<Vertex, 2>> adj(nbrs.size());
    std::vector<int> fill(nbrs.size(), 0);
    for (auto [a, b] : link_edges[v]) {
      std::size_t ia = index_of(a);
      std::size_t ib = index_of(b);
      adj[ia][fill[ia]++] = b;
      adj[ib][fill[ib]++] = a;
    }
    std::vector<Vertex> cycle{nbrs.front()};
    Vertex prev = nbrs.front();
    Vertex cur = adj[0][0];
    while (cur != nbrs.front() && cycle.size() <= nbrs.size()) {
      cycle.push_back(cur);
      const auto& next = adj[index_of(cur)];
      Vertex step = next[0] == prev ? next[1] : next[0];
      prev = cur;
      cur = step;
    }
    if (cycle.size() != nbrs.size()) {
      throw NotASphere(NotSphereReason::kLinkNotCycle,
                       "link of vertex " + std::to_string(v) +
                           " is not a single cycle");
    }
    normalize_cycle(cycle);
    s.links_[v] = std::move(cycle);
  }

  if (n > 0) {
    std::vector<bool> seen(n, false);
    std::vector<Vertex> stack{0};
    seen[0] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : s.neighbors_[v]) {
        if (!seen[w]) {
          seen[w] = true;
          ++reached;
          stack.push_back(w);
        }
      }
    }
    if (reached != n) {
      throw NotASphere(NotSphereReason::kDisconnected,
                       std::to_string(n - reached) +
                           " vertices unreachable from vertex 0");
    }
  }

  auto euler = static_cast<long long>(n) -
               static_cast<long long>(s.edges_.size()) +
               static_cast<long long>(s.faces_.size());
  if (euler != 2) {
    throw NotASphere(NotSphereReason::kEulerFail,
                     "V-E+F = " + std::to_string(euler));
  }
  return s;
}

std::span<const Vertex> Sphere::neighbors(Vertex v) const {
  if (v >= neighbors_.size()) {
    throw Error(ErrorCode::kBadVertex, "vertex " + std::to_string(v) +
                                           " out of range 0.." +
                                           std::to_string(num_vertices()));
  }
  return neighbors_[v];
}

std::span<const Vertex> Sphere::link_cycle(Vertex v) const {
  if (v >= links_.size()) {
    throw Error(ErrorCode::kBadVertex, "vertex " + std::to_string(v) +
                                           " out of range 0.." +
                                           std::to_string(num_vertices()));
  }
  return links_[v];
}

bool Sphere::adjacent(Vertex a, Vertex b) const {
  if (a >= neighbors_.size() || b >= neighbors_.size()) return false;
  const auto& nbrs = neighbors_[a];
  return std::binary_search(nbrs.begin(), nbrs.end(), b);
}

bool Sphere::has_face(Face f) const {
  std::sort(f.begin(), f.end());
  return std::binary_search(faces_.begin(), faces_.end(), f);
}

void Sphere::require_edge(Edge e) const {
  if (!has_edge(e)) {
    throw Error(ErrorCode::kNotAnEdge, edge_str(e) + " is not an edge");
  }
}

std::pair<Vertex, Vertex> Sphere::apexes(Edge e) const {
  require_edge(e);
  const auto& cycle = links_[e.lo];
  auto k = cycle.size();
  auto pos = static_cast<std::size_t>(
      std::find(cycle.begin(), cycle.end(), e.hi) - cycle.begin());
  Vertex x = cycle[(pos + 1) % k];
  Vertex y = cycle[(pos + k - 1) % k];
  return {std::min(x, y), std::max(x, y)};
}

std::size_t RVector::total() const {
  return std::accumulate(counts.begin(), counts.end(), std::size_t{0});
}

RVector r_vector(const Sphere& sphere) {
  RVector r;
  for (Vertex v = 0; v < sphere.num_vertices(); ++v) {
    std::size_t d = sphere.degree(v);
    if (r.counts.size() <= d) r.counts.resize(d + 1, 0);
    ++r.counts[d];
  }
  return r;
}

Sphere tetrahedron() {
  const std::array<Face, 4> faces{{{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}};
  return Sphere::from_faces(4, faces);
}

Sphere octahedron() {
  const std::array<Face, 8> faces{{{0, 1, 2},
                                   {0, 2, 4},
                                   {0, 4, 3},
                                   {0, 3, 1},
                                   {5, 1, 2},
                                   {5, 2, 4},
                                   {5, 4, 3},
                                   {5, 3, 1}}};
  return Sphere::from_faces(6, faces);
}

Sphere relabel(const Sphere& sphere, std::span<const Vertex> new_label) {
  const std::size_t n = sphere.num_vertices();
  if (new_label.size() != n) {
    throw Error(ErrorCode::kBadVertex, "relabeling has " +
                                           std::to_string(new_label.size()) +
                                           " entries for " + std::to_string(n) +
                                           " vertices");
  }
  std::vector<bool> hit(n, false);
  for (Vertex x : new_label) {
    if (x >= n || hit[x]) {
      throw Error(ErrorCode::kBadVertex, "relabeling is not a permutation");
    }
    hit[x] = true;
  }
  std::vector<Face> faces;
  faces.reserve(sphere.num_faces());
  for (const Face& f : sphere.faces()) {
    faces.push_back({new_label[f[0]], new_label[f[1]], new_label[f[2]]});
  }
  return Sphere::from_faces(n, faces);
}

}  // namespace flagsphere
