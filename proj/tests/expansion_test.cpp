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

#include <array>
#include <vector>

#include "doctest.h"
#include "flagsphere/canonical.hpp"
#include "flagsphere/contraction.hpp"
#include "flagsphere/error.hpp"
#include "flagsphere/expansion.hpp"
#include "flagsphere/flagness.hpp"
#include "flagsphere/oracle.hpp"
#include "support/fixtures.hpp"

namespace fs = flagsphere;
using fs::Edge;
using fs::SplitSpec;
using fs::Sphere;
using fs::Vertex;

TEST_CASE("splitting octahedron vertex 0 along {1,4} gives S7") {
  Sphere s = fs::split_vertex(fs::octahedron(), SplitSpec{0, 1, 4});
  CHECK(s == fs::testing::s7());
  CHECK(s.num_vertices() == 7);
  CHECK(s.num_edges() == 15);
  CHECK(s.num_faces() == 10);
  // The unordered pair gives the same split either way round.
  CHECK(fs::split_vertex(fs::octahedron(), SplitSpec{0, 4, 1}) == s);
}

TEST_CASE("adjacent split creates a degree-3 vertex") {
  SplitSpec spec{0, 1, 2};
  CHECK(fs::is_adjacent_split(fs::octahedron(), spec));
  Sphere s = fs::split_vertex(fs::octahedron(), spec);
  CHECK(s.num_vertices() == 7);
  CHECK(fs::r_vector(s)[3] == 1);
  CHECK_FALSE(fs::is_flag(s));
  CHECK(fs::is_adjacent_split(fs::octahedron(), SplitSpec{0, 1, 3}));
  CHECK_FALSE(fs::is_adjacent_split(fs::octahedron(), SplitSpec{0, 2, 3}));
}

TEST_CASE("bad split specs") {
  Sphere o = fs::octahedron();
  auto code_of = [&](SplitSpec spec) {
    try {
      fs::split_vertex(o, spec);
    } catch (const fs::Error& e) {
      return e.code();
    }
    return fs::ErrorCode::kIo;
  };
  CHECK(code_of({0, 1, 1}) == fs::ErrorCode::kBadSplitSpec);
  CHECK(code_of({0, 1, 5}) == fs::ErrorCode::kBadSplitSpec);
  CHECK(code_of({9, 1, 2}) == fs::ErrorCode::kBadSplitSpec);
}

TEST_CASE("every split contracts back to its source") {
  for (const Sphere& k : fs::testing::corpus(9)) {
    const auto fresh = static_cast<Vertex>(k.num_vertices());
    for (const fs::Expansion& e : fs::all_splits(k)) {
      CHECK(e.sphere.num_vertices() == k.num_vertices() + 1);
      CHECK(e.sphere.num_edges() == k.num_edges() + 3);
      CHECK(e.sphere.num_faces() == k.num_faces() + 2);
      Sphere back = fs::contract(e.sphere, Edge(e.spec.w, fresh)).sphere;
      REQUIRE(fs::isomorphic(back, k));
    }
  }
}

TEST_CASE("flag expansions of the octahedron") {
  auto list = fs::flag_expansions(fs::octahedron());
  CHECK(list.size() == 12);
  for (const auto& e : list) {
    CHECK(fs::oracle::brute_isomorphic(e.sphere, fs::testing::s7()));
  }
  CHECK_THROWS_AS(fs::flag_expansions(fs::tetrahedron()), fs::Error);
}

TEST_CASE("flag expansions of S7") {
  CHECK(fs::flag_expansions(fs::testing::s7()).size() == 20);
}

TEST_CASE("expansion bound") {
  CHECK(fs::expansion_bound(fs::octahedron()) == 12);
  CHECK(fs::expansion_bound(fs::testing::s7()) == 20);
  CHECK(fs::expansion_bound(fs::tetrahedron()) == 0);
  CHECK(fs::diagonal_count(3) == 0);
  CHECK(fs::diagonal_count(4) == 2);
  CHECK(fs::diagonal_count(5) == 5);
  CHECK(fs::diagonal_count(6) == 9);
}

TEST_CASE("diagonal formula against the direct sum") {
  for (std::size_t k = 4; k <= 64; ++k) {
    std::size_t sum = 0;
    for (std::size_t i = 0; i + 4 <= k; ++i) sum += i + 2;
    CHECK(sum == fs::diagonal_count(k));
  }
}

TEST_CASE("flag expansions are flag, attain the bound, and invert") {
  for (const Sphere& k : fs::testing::flag_corpus(9)) {
    auto list = fs::flag_expansions(k);
    CHECK(list.size() == fs::expansion_bound(k));
    const auto fresh = static_cast<Vertex>(k.num_vertices());
    for (const auto& e : list) {
      REQUIRE(fs::is_flag(e.sphere));
      CHECK_FALSE(fs::edge_in_belt(e.sphere, Edge(e.spec.w, fresh)));
      CHECK(fs::isomorphic(
          fs::contract(e.sphere, Edge(e.spec.w, fresh)).sphere, k));
    }
  }
}

TEST_CASE("adjacent splits of flag spheres are never flag") {
  for (const Sphere& k : fs::testing::flag_corpus(9)) {
    for (const auto& e : fs::all_splits(k)) {
      bool adjacent = fs::is_adjacent_split(k, e.spec);
      CHECK(fs::is_flag(e.sphere) == !adjacent);
    }
  }
}
