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

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "doctest.h"
#include "flagsphere/canonical.hpp"
#include "flagsphere/error.hpp"
#include "flagsphere/expansion.hpp"
#include "flagsphere/oracle.hpp"
#include "support/fixtures.hpp"

namespace fs = flagsphere;
using fs::CanonicalForm;
using fs::Sphere;

TEST_CASE("octahedron form is invariant under relabeling") {
  std::mt19937 rng(2026);
  const CanonicalForm form = fs::canonical_form(fs::octahedron());
  for (int trial = 0; trial < 100; ++trial) {
    auto perm = fs::testing::random_permutation(6, rng);
    Sphere relabeled = fs::relabel(fs::octahedron(), perm);
    CHECK(fs::canonical_form(relabeled) == form);
    CHECK(fs::isomorphic(relabeled, fs::octahedron()));
  }
}

TEST_CASE("distinct classes get distinct forms") {
  CHECK(fs::canonical_form(fs::octahedron()) !=
        fs::canonical_form(fs::testing::s7()));
  CHECK_FALSE(fs::isomorphic(fs::tetrahedron(), fs::octahedron()));
}

TEST_CASE("canonical sphere is a fixed representative") {
  std::mt19937 rng(5);
  for (const Sphere& s : fs::testing::corpus(8)) {
    Sphere rep = fs::canonical_sphere(s);
    auto perm = fs::testing::random_permutation(s.num_vertices(), rng);
    CHECK(fs::canonical_sphere(fs::relabel(s, perm)) == rep);
    CHECK(fs::canonical_form(rep) == fs::canonical_form(s));
  }
}

TEST_CASE("mirror images share a form") {
  Sphere s7 = fs::testing::s7();
  CHECK(fs::canonical_form(s7) == std::min(fs::oriented_form(s7, false),
                                           fs::oriented_form(s7, true)));

  // A chiral sphere: its two orientations give different oriented forms.
  std::mt19937 rng(3);
  bool found_chiral = false;
  for (const Sphere& s : fs::testing::corpus(10)) {
    CanonicalForm left = fs::oriented_form(s, false);
    CanonicalForm right = fs::oriented_form(s, true);
    if (left == right) continue;
    found_chiral = true;
    CHECK(fs::canonical_form(s) == std::min(left, right));
    // Some relabelings flip the induced orientation; the unoriented form
    // must not notice.
    bool flipped = false;
    for (int trial = 0; trial < 50; ++trial) {
      Sphere mirror =
          fs::relabel(s, fs::testing::random_permutation(s.num_vertices(), rng));
      std::set<CanonicalForm> pair{fs::oriented_form(mirror, false),
                                   fs::oriented_form(mirror, true)};
      CHECK(pair == std::set<CanonicalForm>{left, right});
      flipped |= fs::oriented_form(mirror, false) == right;
      CHECK(fs::canonical_form(mirror) == fs::canonical_form(s));
    }
    CHECK(flipped);
    break;
  }
  CHECK(found_chiral);
}

TEST_CASE("all octahedron expansions are pairwise isomorphic") {
  auto list = fs::flag_expansions(fs::octahedron());
  for (const auto& a : list) {
    for (const auto& b : list) {
      CHECK(fs::isomorphic(a.sphere, b.sphere));
      CHECK(fs::oracle::brute_isomorphic(a.sphere, b.sphere));
    }
  }
}

TEST_CASE("agreement with brute-force isomorphism up to 8 vertices") {
  std::mt19937 rng(17);
  const auto& spheres = fs::testing::corpus(8);
  for (const Sphere& a : spheres) {
    for (const Sphere& b : spheres) {
      REQUIRE(fs::isomorphic(a, b) == fs::oracle::brute_isomorphic(a, b));
    }
    Sphere c = fs::relabel(a, fs::testing::random_permutation(a.num_vertices(), rng));
    CHECK(fs::isomorphic(a, c));
    CHECK(fs::oracle::brute_isomorphic(a, c));
  }
}

TEST_CASE("forms separate every class up to 10 vertices") {
  std::set<CanonicalForm> forms;
  for (const Sphere& s : fs::testing::corpus(10)) {
    forms.insert(fs::canonical_form(s));
  }
  CHECK(forms.size() == fs::testing::corpus(10).size());
}

TEST_CASE("hex rendering") {
  CanonicalForm f = fs::canonical_form(fs::testing::s7());
  std::string hex = f.to_hex();
  CHECK(hex.size() == 2 * f.bytes().size());
  CHECK(hex.substr(0, 4) == "070a");  // n = 7, ten faces
  CHECK(CanonicalForm::from_hex(hex) == f);
  CHECK_THROWS_AS(CanonicalForm::from_hex("abc"), fs::Error);
  CHECK_THROWS_AS(CanonicalForm::from_hex("zz"), fs::Error);
}
