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

#include "flagsphere/oracle.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

#include "flagsphere/canonical.hpp"
#include "flagsphere/error.hpp"
#include "flagsphere/expansion.hpp"
#include "parallel.hpp"

namespace flagsphere::oracle {
namespace {

// Extends `clique` by vertices above its last member; returns false as soon
// as a clique that is not a simplex shows up.
bool cliques_are_simplices(const Sphere& sphere, std::vector<Vertex>& clique) {
  if (clique.size() == 3 &&
      !sphere.has_face({clique[0], clique[1], clique[2]})) {
    return false;
  }
  if (clique.size() >= 4) return false;
  const auto n = static_cast<Vertex>(sphere.num_vertices());
  for (Vertex v = clique.back() + 1; v < n; ++v) {
    bool joins = std::all_of(clique.begin(), clique.end(),
                             [&](Vertex u) { return sphere.adjacent(u, v); });
    if (!joins) continue;
    clique.push_back(v);
    bool ok = cliques_are_simplices(sphere, clique);
    clique.pop_back();
    if (!ok) return false;
  }
  return true;
}

class Matcher {
 public:
  Matcher(const Sphere& a, const Sphere& b)
      : a_(a), b_(b), map_(a.num_vertices()), used_(b.num_vertices(), false) {}

  bool search(Vertex v) {
    if (v == a_.num_vertices()) return faces_match();
    for (Vertex t = 0; t < b_.num_vertices(); ++t) {
      if (used_[t] || b_.degree(t) != a_.degree(v)) continue;
      bool consistent = true;
      for (Vertex u = 0; u < v && consistent; ++u) {
        consistent = a_.adjacent(u, v) == b_.adjacent(map_[u], t);
      }
      if (!consistent) continue;
      map_[v] = t;
      used_[t] = true;
      if (search(v + 1)) return true;
      used_[t] = false;
    }
    return false;
  }

 private:
  bool faces_match() const {
    return std::all_of(a_.faces().begin(), a_.faces().end(),
                       [&](const Face& f) {
                         return b_.has_face({map_[f[0]], map_[f[1]], map_[f[2]]});
                       });
  }

  const Sphere& a_;
  const Sphere& b_;
  std::vector<Vertex> map_;
  std::vector<bool> used_;
};

std::vector<std::size_t> degree_sequence(const Sphere& sphere) {
  std::vector<std::size_t> seq;
  for (Vertex v = 0; v < sphere.num_vertices(); ++v) {
    seq.push_back(sphere.degree(v));
  }
  std::sort(seq.begin(), seq.end());
  return seq;
}

}  // namespace

bool brute_is_flag(const Sphere& sphere) {
  std::vector<Vertex> clique;
  for (Vertex v = 0; v < sphere.num_vertices(); ++v) {
    clique.assign(1, v);
    if (!cliques_are_simplices(sphere, clique)) return false;
  }
  return true;
}

std::vector<Belt> brute_belts(const Sphere& sphere) {
  std::vector<Belt> out;
  const auto n = static_cast<Vertex>(sphere.num_vertices());
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      for (Vertex c = b + 1; c < n; ++c) {
        for (Vertex d = c + 1; d < n; ++d) {
          const std::array<Vertex, 4> set{a, b, c, d};
          std::array<int, 4> induced_degree{};
          int edges = 0;
          for (int i = 0; i < 4; ++i) {
            for (int j = i + 1; j < 4; ++j) {
              if (sphere.adjacent(set[i], set[j])) {
                ++edges;
                ++induced_degree[i];
                ++induced_degree[j];
              }
            }
          }
          if (edges != 4) continue;
          if (std::any_of(induced_degree.begin(), induced_degree.end(),
                          [](int deg) { return deg != 2; })) {
            continue;
          }
          if (sphere.has_face({a, b, c}) || sphere.has_face({a, b, d}) ||
              sphere.has_face({a, c, d}) || sphere.has_face({b, c, d})) {
            continue;
          }
          // a's two cycle neighbors, smaller first, and the vertex opposite.
          std::vector<Vertex> nbrs;
          Vertex opposite = a;
          for (Vertex x : {b, c, d}) {
            if (sphere.adjacent(a, x)) {
              nbrs.push_back(x);
            } else {
              opposite = x;
            }
          }
          out.push_back(Belt{{a, nbrs[0], opposite, nbrs[1]}});
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool brute_isomorphic(const Sphere& a, const Sphere& b) {
  if (a.num_vertices() != b.num_vertices() ||
      a.num_faces() != b.num_faces()) {
    return false;
  }
  if (a.num_vertices() > kMaxBruteVertices) {
    throw Error(ErrorCode::kTooLarge,
                "brute-force isomorphism limited to " +
                    std::to_string(kMaxBruteVertices) + " vertices");
  }
  if (degree_sequence(a) != degree_sequence(b)) return false;
  return Matcher(a, b).search(0);
}

std::vector<Sphere> enumerate_all_spheres(std::size_t max_n,
                                          std::size_t jobs) {
  if (max_n < 4) {
    throw Error(ErrorCode::kBudgetTooSmall,
                "enumeration needs max_n >= 4, got " + std::to_string(max_n));
  }
  if (max_n > kMaxEnumerationVertices) {
    throw Error(ErrorCode::kBudgetTooLarge,
                "enumeration limited to max_n <= " +
                    std::to_string(kMaxEnumerationVertices) + ", got " +
                    std::to_string(max_n));
  }
  std::vector<Sphere> all{tetrahedron()};
  std::vector<Sphere> level{tetrahedron()};
  for (std::size_t n = 5; n <= max_n; ++n) {
    std::vector<std::vector<Sphere>> children(level.size());
    std::vector<std::vector<CanonicalForm>> forms(level.size());
    const bool brute = n <= 8;
    detail::parallel_for(level.size(), jobs, [&](std::size_t i) {
      for (Expansion& e : all_splits(level[i])) {
        if (!brute) forms[i].push_back(canonical_form(e.sphere));
        children[i].push_back(std::move(e.sphere));
      }
    });

    std::vector<Sphere> next;
    if (brute) {
      std::vector<std::vector<std::size_t>> signatures;
      for (auto& group : children) {
        for (Sphere& s : group) {
          auto sig = degree_sequence(s);
          bool seen = false;
          for (std::size_t r = 0; r < next.size() && !seen; ++r) {
            seen = signatures[r] == sig && brute_isomorphic(next[r], s);
          }
          if (!seen) {
            signatures.push_back(std::move(sig));
            next.push_back(std::move(s));
          }
        }
      }
    } else {
      std::unordered_set<CanonicalForm> seen;
      for (std::size_t i = 0; i < children.size(); ++i) {
        for (std::size_t j = 0; j < children[i].size(); ++j) {
          if (seen.insert(forms[i][j]).second) {
            next.push_back(std::move(children[i][j]));
          }
        }
      }
    }
    all.insert(all.end(), next.begin(), next.end());
    level = std::move(next);
  }
  return all;
}

}  // namespace flagsphere::oracle
