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

#include "flagsphere/hasse.hpp"

#include <algorithm>

#include "flagsphere/error.hpp"
#include "flagsphere/expansion.hpp"
#include "flagsphere/flagness.hpp"
#include "json.hpp"
#include "parallel.hpp"

namespace flagsphere {
namespace {

using nlohmann::json;

constexpr std::string_view kFormat = "flagsphere-hasse";
constexpr int kVersion = 1;
constexpr std::size_t kDotPrefix = 16;

json faces_to_json(const Sphere& sphere) {
  json faces = json::array();
  for (const Face& f : sphere.faces()) faces.push_back({f[0], f[1], f[2]});
  return faces;
}

}  // namespace

std::size_t HasseGraph::in_degree(const CanonicalForm& form) const {
  return static_cast<std::size_t>(
      std::count_if(arcs.begin(), arcs.end(),
                    [&](const Arc& a) { return a.second == form; }));
}

std::size_t HasseGraph::out_degree(const CanonicalForm& form) const {
  auto lo = arcs.lower_bound({form, CanonicalForm{}});
  std::size_t count = 0;
  for (auto it = lo; it != arcs.end() && it->first == form; ++it) ++count;
  return count;
}

std::map<std::size_t, std::size_t> HasseGraph::level_counts() const {
  std::map<std::size_t, std::size_t> counts;
  for (const auto& [form, sphere] : nodes) ++counts[sphere.num_vertices()];
  return counts;
}

std::map<std::size_t, std::size_t> HasseGraph::arcs_into_level() const {
  std::map<std::size_t, std::size_t> counts;
  for (const auto& [n, c] : level_counts()) counts[n] = 0;
  for (const Arc& arc : arcs) {
    auto it = nodes.find(arc.second);
    if (it != nodes.end()) ++counts[it->second.num_vertices()];
  }
  return counts;
}

std::vector<CanonicalForm> HasseGraph::sources() const {
  std::set<CanonicalForm> targets;
  for (const Arc& arc : arcs) targets.insert(arc.second);
  std::vector<CanonicalForm> out;
  for (const auto& [form, sphere] : nodes) {
    if (!targets.count(form)) out.push_back(form);
  }
  return out;
}

HasseGraph build_hasse(std::size_t max_n, std::size_t jobs) {
  if (max_n < 6) {
    throw Error(ErrorCode::kBudgetTooSmall,
                "Hasse graph needs max_n >= 6, got " + std::to_string(max_n));
  }
  HasseGraph graph;
  graph.max_n = max_n;
  CanonicalLabeling root = canonical_labeling(octahedron());
  graph.nodes.emplace(root.form, relabel(octahedron(), root.new_label));

  std::vector<CanonicalForm> frontier{root.form};
  for (std::size_t n = 6; n < max_n; ++n) {
    struct Child {
      CanonicalForm form;
      std::vector<Vertex> new_label;
      Sphere sphere;
    };
    std::vector<std::vector<Child>> children(frontier.size());
    detail::parallel_for(frontier.size(), jobs, [&](std::size_t i) {
      const Sphere& parent = graph.nodes.at(frontier[i]);
      for (Expansion& e : flag_expansions(parent)) {
        CanonicalLabeling cl = canonical_labeling(e.sphere);
        children[i].push_back(
            {std::move(cl.form), std::move(cl.new_label), std::move(e.sphere)});
      }
    });

    std::set<CanonicalForm> next;
    for (std::size_t i = 0; i < frontier.size(); ++i) {
      for (Child& c : children[i]) {
        if (!graph.nodes.count(c.form)) {
          graph.nodes.emplace(c.form, relabel(c.sphere, c.new_label));
        }
        graph.arcs.insert({frontier[i], c.form});
        next.insert(c.form);
      }
    }
    frontier.assign(next.begin(), next.end());
  }
  return graph;
}

DegreeReport verify_degree_bounds(const HasseGraph& graph) {
  DegreeReport report;
  std::map<CanonicalForm, std::size_t> in_deg;
  std::map<CanonicalForm, std::size_t> out_deg;
  for (const auto& [from, to] : graph.arcs) {
    ++out_deg[from];
    ++in_deg[to];
  }
  for (const auto& [form, sphere] : graph.nodes) {
    NodeBounds b;
    b.form = form;
    b.n = sphere.num_vertices();
    b.in_degree = in_deg[form];
    b.in_bound = belt_free_edges(sphere).size();
    b.out_degree = out_deg[form];
    b.out_bound = expansion_bound(sphere);
    b.out_checked = b.n < graph.max_n;
    b.in_ok = b.in_degree <= b.in_bound;
    b.out_ok = !b.out_checked || b.out_degree <= b.out_bound;
    if (!b.in_ok) ++report.violations;
    if (!b.out_ok) ++report.violations;
    report.nodes.push_back(std::move(b));
  }
  report.sources = graph.sources();
  report.source_is_octahedron =
      report.sources.size() == 1 &&
      report.sources.front() == canonical_form(octahedron());
  return report;
}

std::string export_dot(const HasseGraph& graph) {
  std::map<CanonicalForm, std::size_t> index;
  std::string out = "digraph hasse {\n";
  for (const auto& [form, sphere] : graph.nodes) {
    std::size_t id = index.size();
    index.emplace(form, id);
    out += "  n" + std::to_string(id) + " [label=\"n=" +
           std::to_string(sphere.num_vertices()) + "\\n" +
           form.to_hex().substr(0, kDotPrefix) + "\"];\n";
  }
  for (const auto& [from, to] : graph.arcs) {
    out += "  n" + std::to_string(index.at(from)) + " -> n" +
           std::to_string(index.at(to)) + ";\n";
  }
  out += "}\n";
  return out;
}

std::string export_json(const HasseGraph& graph) {
  json doc;
  doc["format"] = kFormat;
  doc["version"] = kVersion;
  doc["max_n"] = graph.max_n;
  json nodes = json::array();
  for (const auto& [form, sphere] : graph.nodes) {
    nodes.push_back({{"form", form.to_hex()},
                     {"n", sphere.num_vertices()},
                     {"faces", faces_to_json(sphere)}});
  }
  doc["nodes"] = std::move(nodes);
  json arcs = json::array();
  for (const auto& [from, to] : graph.arcs) {
    arcs.push_back({{"from", from.to_hex()}, {"to", to.to_hex()}});
  }
  doc["arcs"] = std::move(arcs);
  return doc.dump(2) + "\n";
}

HasseGraph import_json(std::string_view text) {
  HasseGraph graph;
  try {
    json doc = json::parse(text);
    if (doc.at("format").get<std::string>() != kFormat ||
        doc.at("version").get<int>() != kVersion) {
      throw Error(ErrorCode::kParse, "not a flagsphere Hasse document");
    }
    graph.max_n = doc.at("max_n").get<std::size_t>();
    for (const json& node : doc.at("nodes")) {
      auto faces = node.at("faces").get<std::vector<Face>>();
      Sphere sphere =
          Sphere::from_faces(node.at("n").get<std::size_t>(), faces);
      auto form = CanonicalForm::from_hex(node.at("form").get<std::string>());
      if (!graph.nodes.emplace(std::move(form), std::move(sphere)).second) {
        throw Error(ErrorCode::kParse, "duplicate node in Hasse document");
      }
    }
    for (const json& arc : doc.at("arcs")) {
      auto from = CanonicalForm::from_hex(arc.at("from").get<std::string>());
      auto to = CanonicalForm::from_hex(arc.at("to").get<std::string>());
      if (!graph.nodes.count(from) || !graph.nodes.count(to)) {
        throw Error(ErrorCode::kParse, "arc references an unknown node");
      }
      graph.arcs.insert({std::move(from), std::move(to)});
    }
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParse, std::string("Hasse JSON: ") + e.what());
  }
  return graph;
}

std::string export_levels_tsv(const HasseGraph& graph) {
  std::string out = "n\tcount\tarcs_in_level\n";
  auto arcs = graph.arcs_into_level();
  for (const auto& [n, count] : graph.level_counts()) {
    out += std::to_string(n) + "\t" + std::to_string(count) + "\t" +
           std::to_string(arcs[n]) + "\n";
  }
  return out;
}

}  // namespace flagsphere
