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

#include "flagsphere/contraction.hpp"

#include <algorithm>
#include <iterator>

#include "flagsphere/canonical.hpp"
#include "flagsphere/error.hpp"
#include "flagsphere/flagness.hpp"
#include "flagsphere/oracle.hpp"

namespace flagsphere {
namespace {

std::string edge_str(Edge e) {
  return "{" + std::to_string(e.lo) + "," + std::to_string(e.hi) + "}";
}

std::vector<Vertex> common_neighbors(const Sphere& sphere, Edge e) {
  auto na = sphere.neighbors(e.lo);
  auto nb = sphere.neighbors(e.hi);
  std::vector<Vertex> common;
  std::set_intersection(na.begin(), na.end(), nb.begin(), nb.end(),
                        std::back_inserter(common));
  return common;
}

}  // namespace

bool link_condition(const Sphere& sphere, Edge e) {
  auto [x, y] = sphere.apexes(e);
  auto common = common_neighbors(sphere, e);
  if (common.size() != 2 || common[0] != x || common[1] != y) return false;
  // The links may still share the edge {x, y}; that happens only when both
  // endpoints have degree 3, i.e. on the tetrahedron, whose quotient is a
  // doubled triangle.
  return !(sphere.has_face({e.lo, x, y}) && sphere.has_face({e.hi, x, y}));
}

Contraction contract(const Sphere& sphere, Edge e) {
  if (!link_condition(sphere, e)) {
    throw Error(ErrorCode::kLinkConditionViolated,
                "contracting " + edge_str(e) +
                    " would identify edges; endpoints share a non-apex "
                    "neighbor");
  }
  const auto n = static_cast<Vertex>(sphere.num_vertices());
  std::vector<Vertex> relabel(n);
  for (Vertex v = 0; v < n; ++v) {
    Vertex merged = v == e.hi ? e.lo : v;
    relabel[v] = merged > e.hi ? merged - 1 : merged;
  }
  std::vector<Face> faces;
  faces.reserve(sphere.num_faces() - 2);
  for (const Face& f : sphere.faces()) {
    bool has_lo = std::find(f.begin(), f.end(), e.lo) != f.end();
    bool has_hi = std::find(f.begin(), f.end(), e.hi) != f.end();
    if (has_lo && has_hi) continue;
    faces.push_back({relabel[f[0]], relabel[f[1]], relabel[f[2]]});
  }
  return Contraction{Sphere::from_faces(n - 1, faces), std::move(relabel)};
}

bool is_flag_contractible(const Sphere& sphere, Edge e) {
  require_flag(sphere);
  return !edge_in_belt(sphere, e);
}

bool is_minimal(const Sphere& sphere) {
  require_flag(sphere);
  return std::all_of(sphere.edges().begin(), sphere.edges().end(),
                     [&](const Edge& e) { return edge_in_belt(sphere, e); });
}

std::vector<Vertex> square_link_vertices(const Sphere& sphere) {
  std::vector<Vertex> out;
  for (Vertex w = 0; w < sphere.num_vertices(); ++w) {
    auto link = sphere.link_cycle(w);
    if (link.size() != 4) continue;
    if (!sphere.adjacent(link[0], link[2]) &&
        !sphere.adjacent(link[1], link[3])) {
      out.push_back(w);
    }
  }
  return out;
}

ContractionCertificate reduce_to_octahedron(const Sphere& sphere) {
  require_flag(sphere);
  const Sphere target = octahedron();
  std::vector<ContractionStep> steps;
  Sphere current = sphere;
  while (!isomorphic(current, target)) {
    const auto& edges = current.edges();
    auto it = std::find_if(edges.begin(), edges.end(), [&](const Edge& e) {
      return !edge_in_belt(current, e);
    });
    if (it == edges.end()) {
      throw Error(ErrorCode::kInternalMinimalityViolation,
                  "flag sphere with " +
                      std::to_string(current.num_vertices()) +
                      " vertices has every edge in a belt but is not the "
                      "octahedron");
    }
    Contraction c = contract(current, *it);
    steps.push_back({*it, std::move(c.relabel)});
    current = std::move(c.sphere);
  }
  return ContractionCertificate{sphere, std::move(steps), std::move(current)};
}

CertificateCheck verify_certificate(const ContractionCertificate& cert) {
  auto fail = [](std::string why) { return CertificateCheck{false, why}; };
  if (!oracle::brute_is_flag(cert.start)) return fail("start is not flag");
  const std::size_t n = cert.start.num_vertices();
  if (n < 6 || cert.steps.size() != n - 6) {
    return fail("expected " + std::to_string(n < 6 ? 0 : n - 6) +
                " steps, found " + std::to_string(cert.steps.size()));
  }
  Sphere current = cert.start;
  for (std::size_t i = 0; i < cert.steps.size(); ++i) {
    const ContractionStep& step = cert.steps[i];
    const std::string at = "step " + std::to_string(i) + ": ";
    if (!current.has_edge(step.edge)) {
      return fail(at + edge_str(step.edge) + " is not an edge");
    }
    for (const Belt& b : oracle::brute_belts(current)) {
      if (b.contains(step.edge.lo) && b.contains(step.edge.hi)) {
        return fail(at + edge_str(step.edge) + " lies in a belt");
      }
    }
    if (!link_condition(current, step.edge)) {
      return fail(at + "link condition fails");
    }
    Contraction c = contract(current, step.edge);
    if (c.relabel != step.relabel) return fail(at + "relabeling mismatch");
    if (!oracle::brute_is_flag(c.sphere)) {
      return fail(at + "result is not flag");
    }
    current = std::move(c.sphere);
  }
  if (!(current == cert.end)) return fail("replay does not reproduce end");
  if (!oracle::brute_isomorphic(cert.end, octahedron())) {
    return fail("end is not the octahedron");
  }
  return CertificateCheck{true, {}};
}

}  // namespace flagsphere
