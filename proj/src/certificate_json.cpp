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

#include "flagsphere/certificate_json.hpp"

#include "flagsphere/error.hpp"
#include "json.hpp"

namespace flagsphere {
namespace {

using nlohmann::json;

constexpr std::string_view kFormat = "flagsphere-certificate";
constexpr int kVersion = 1;

json sphere_to_json(const Sphere& sphere) {
  json faces = json::array();
  for (const Face& f : sphere.faces()) faces.push_back({f[0], f[1], f[2]});
  return {{"n", sphere.num_vertices()}, {"faces", std::move(faces)}};
}

Sphere sphere_from_json(const json& j) {
  return Sphere::from_faces(j.at("n").get<std::size_t>(),
                            j.at("faces").get<std::vector<Face>>());
}

}  // namespace

std::string certificate_to_json(const ContractionCertificate& cert) {
  json doc;
  doc["format"] = kFormat;
  doc["version"] = kVersion;
  doc["start"] = sphere_to_json(cert.start);
  json steps = json::array();
  for (const ContractionStep& step : cert.steps) {
    steps.push_back({{"edge", {step.edge.lo, step.edge.hi}},
                     {"relabel", step.relabel}});
  }
  doc["steps"] = std::move(steps);
  doc["end"] = sphere_to_json(cert.end);
  return doc.dump(2) + "\n";
}

ContractionCertificate certificate_from_json(std::string_view text) {
  try {
    json doc = json::parse(text);
    if (doc.at("format").get<std::string>() != kFormat ||
        doc.at("version").get<int>() != kVersion) {
      throw Error(ErrorCode::kBadCertificate, "not a flagsphere certificate");
    }
    std::vector<ContractionStep> steps;
    for (const json& s : doc.at("steps")) {
      auto ends = s.at("edge").get<std::array<Vertex, 2>>();
      steps.push_back({Edge(ends[0], ends[1]),
                       s.at("relabel").get<std::vector<Vertex>>()});
    }
    return ContractionCertificate{sphere_from_json(doc.at("start")),
                                  std::move(steps),
                                  sphere_from_json(doc.at("end"))};
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kBadCertificate,
                std::string("certificate JSON: ") + e.what());
  }
}

}  // namespace flagsphere
