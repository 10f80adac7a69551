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
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "flagsphere/canonical.hpp"
#include "flagsphere/sphere.hpp"

namespace flagsphere {

// Hasse graph of the contraction order on flag spheres with at most max_n
// vertices. Nodes are isomorphism classes keyed by canonical form, each with
// its canonically labeled representative. An arc (A, B) means some single
// flag-preserving contraction of B yields A; arcs run from the smaller
// sphere to the larger one and are never parallel.
struct HasseGraph {
  using Arc = std::pair<CanonicalForm, CanonicalForm>;

  std::size_t max_n = 0;
  std::map<CanonicalForm, Sphere> nodes;
  std::set<Arc> arcs;

  std::size_t in_degree(const CanonicalForm& form) const;
  std::size_t out_degree(const CanonicalForm& form) const;

  // n -> number of classes with n vertices.
  std::map<std::size_t, std::size_t> level_counts() const;
  // n -> number of arcs ending at a class with n vertices.
  std::map<std::size_t, std::size_t> arcs_into_level() const;

  std::vector<CanonicalForm> sources() const;
};

// Breadth-first growth from the octahedron through flag expansions. Each
// level's expansions are computed on up to `jobs` threads and merged in
// canonical order, so the result does not depend on `jobs`.
// Throws Error(kBudgetTooSmall) for max_n < 6.
HasseGraph build_hasse(std::size_t max_n, std::size_t jobs = 1);

struct NodeBounds {
  CanonicalForm form;
  std::size_t n = 0;
  std::size_t in_degree = 0;
  std::size_t in_bound = 0;  // edges lying in no belt
  std::size_t out_degree = 0;
  std::size_t out_bound = 0;  // sum r_k k(k-3)/2
  bool out_checked = false;   // false on the top level, which is truncated
  bool in_ok = true;
  bool out_ok = true;
};

struct DegreeReport {
  std::vector<NodeBounds> nodes;  // in canonical order
  std::size_t violations = 0;
  std::vector<CanonicalForm> sources;
  bool source_is_octahedron = false;

  bool ok() const {
    return violations == 0 && sources.size() == 1 && source_is_octahedron;
  }
};

DegreeReport verify_degree_bounds(const HasseGraph& graph);

// Nodes are named n0, n1, ... in canonical order and labeled with n and the
// first 16 hex digits of the form.
std::string export_dot(const HasseGraph& graph);

std::string export_json(const HasseGraph& graph);

// Throws Error(kParse) on malformed documents and NotASphere on invalid
// representatives.
HasseGraph import_json(std::string_view text);

// Header "n\tcount\tarcs_in_level", then one row per level.
std::string export_levels_tsv(const HasseGraph& graph);

}  // namespace flagsphere
