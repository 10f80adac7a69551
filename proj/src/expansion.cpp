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

#include "flagsphere/expansion.hpp"

#include <algorithm>
#include <string>

#include "flagsphere/error.hpp"
#include "flagsphere/flagness.hpp"

namespace flagsphere {
namespace {

std::string spec_str(SplitSpec s) {
  return "(w=" + std::to_string(s.w) + ", a=" + std::to_string(s.a) +
         ", b=" + std::to_string(s.b) + ")";
}

struct ChordPositions {
  std::size_t first;   // position of the earlier chord endpoint
  std::size_t second;  // position of the later one
};

ChordPositions locate_chord(const Sphere& sphere, SplitSpec spec) {
  if (spec.w >= sphere.num_vertices()) {
    throw Error(ErrorCode::kBadSplitSpec,
                spec_str(spec) + ": vertex out of range");
  }
  if (spec.a == spec.b) {
    throw Error(ErrorCode::kBadSplitSpec, spec_str(spec) + ": a == b");
  }
  auto cycle = sphere.link_cycle(spec.w);
  auto ia = std::find(cycle.begin(), cycle.end(), spec.a);
  auto ib = std::find(cycle.begin(), cycle.end(), spec.b);
  if (ia == cycle.end() || ib == cycle.end()) {
    throw Error(ErrorCode::kBadSplitSpec,
                spec_str(spec) + ": a and b must lie on the link of w");
  }
  auto pa = static_cast<std::size_t>(ia - cycle.begin());
  auto pb = static_cast<std::size_t>(ib - cycle.begin());
  return {std::min(pa, pb), std::max(pa, pb)};
}

std::vector<Expansion> splits(const Sphere& sphere, bool flag_only) {
  std::vector<Expansion> out;
  for (Vertex w = 0; w < sphere.num_vertices(); ++w) {
    auto cycle = sphere.link_cycle(w);
    const std::size_t k = cycle.size();
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = i + 1; j < k; ++j) {
        bool consecutive = j == i + 1 || (i == 0 && j == k - 1);
        if (flag_only && consecutive) continue;
        SplitSpec spec{w, cycle[i], cycle[j]};
        out.push_back({spec, split_vertex(sphere, spec)});
      }
    }
  }
  return out;
}

}  // namespace

Sphere split_vertex(const Sphere& sphere, SplitSpec spec) {
  auto [first, second] = locate_chord(sphere, spec);
  auto cycle = sphere.link_cycle(spec.w);
  const std::size_t k = cycle.size();
  const Vertex w = spec.w;
  const auto fresh = static_cast<Vertex>(sphere.num_vertices());
  const Vertex a = cycle[first];
  const Vertex b = cycle[second];

  std::vector<Face> faces;
  faces.reserve(sphere.num_faces() + 2);
  for (const Face& f : sphere.faces()) {
    if (std::find(f.begin(), f.end(), w) == f.end()) faces.push_back(f);
  }
  for (std::size_t i = first; i < second; ++i) {
    faces.push_back({w, cycle[i], cycle[i + 1]});
  }
  for (std::size_t i = second; i != first; i = (i + 1) % k) {
    faces.push_back({fresh, cycle[i], cycle[(i + 1) % k]});
  }
  faces.push_back({w, fresh, a});
  faces.push_back({w, fresh, b});
  return Sphere::from_faces(sphere.num_vertices() + 1, faces);
}

bool is_adjacent_split(const Sphere& sphere, SplitSpec spec) {
  auto [first, second] = locate_chord(sphere, spec);
  const std::size_t k = sphere.degree(spec.w);
  return second == first + 1 || (first == 0 && second == k - 1);
}

std::vector<Expansion> flag_expansions(const Sphere& sphere) {
  require_flag(sphere);
  return splits(sphere, true);
}

std::vector<Expansion> all_splits(const Sphere& sphere) {
  return splits(sphere, false);
}

std::size_t diagonal_count(std::size_t k) {
  return k < 3 ? 0 : k * (k - 3) / 2;
}

std::size_t expansion_bound(const Sphere& sphere) {
  RVector r = r_vector(sphere);
  std::size_t total = 0;
  for (std::size_t k = 0; k < r.counts.size(); ++k) {
    total += r[k] * diagonal_count(k);
  }
  return total;
}

}  // namespace flagsphere
