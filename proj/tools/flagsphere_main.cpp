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

// Command-line front end. Domain errors print `ERR <code>: <detail>` on
// stderr and exit 1; usage errors exit 2.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "flagsphere/canonical.hpp"
#include "flagsphere/certificate_json.hpp"
#include "flagsphere/contraction.hpp"
#include "flagsphere/error.hpp"
#include "flagsphere/expansion.hpp"
#include "flagsphere/flagness.hpp"
#include "flagsphere/hasse.hpp"
#include "flagsphere/oracle.hpp"
#include "flagsphere/tri_io.hpp"

namespace {

using namespace flagsphere;

constexpr int kDomainError = 1;
constexpr int kUsageError = 2;

Sphere load(const std::string& path) { return parse_tri(read_text(path)); }

int cmd_validate(const std::string& file) {
  Sphere s = load(file);
  std::cout << "V=" << s.num_vertices() << " E=" << s.num_edges()
            << " F=" << s.num_faces() << "\n";
  return 0;
}

int cmd_flag(const std::string& file) {
  Sphere s = load(file);
  std::size_t min_degree = r_vector(s).counts.size();
  for (Vertex v = 0; v < s.num_vertices(); ++v) {
    min_degree = std::min(min_degree, s.degree(v));
  }
  auto missing = missing_triangles(s);
  std::cout << "flag: " << (is_flag(s) ? "true" : "false") << "\n"
            << "min-degree: " << min_degree << "\n"
            << "missing-triangles: " << missing.size() << "\n";
  for (const MissingFace& m : missing) {
    std::cout << m.vertices[0] << " " << m.vertices[1] << " " << m.vertices[2]
              << "\n";
  }
  return 0;
}

int cmd_belts(const std::string& file) {
  Sphere s = load(file);
  auto list = belts(s);
  std::cout << "belts: " << list.size() << "\n";
  for (const Belt& b : list) {
    std::cout << b.cycle[0] << " " << b.cycle[1] << " " << b.cycle[2] << " "
              << b.cycle[3] << "\n";
  }
  auto free_edges = belt_free_edges(s);
  std::cout << "belt-free-edges: " << free_edges.size() << "\n";
  for (const Edge& e : free_edges) std::cout << e.lo << " " << e.hi << "\n";
  return 0;
}

int cmd_contract(const std::string& file, std::uint32_t u, std::uint32_t v) {
  Sphere s = load(file);
  Edge e(u, v);
  s.require_edge(e);
  std::cout << to_tri(contract(s, e).sphere);
  return 0;
}

int cmd_reduce(const std::string& file, const std::string& cert_path) {
  ContractionCertificate cert = reduce_to_octahedron(load(file));
  if (!cert_path.empty()) write_text(cert_path, certificate_to_json(cert));
  std::cout << "steps: " << cert.steps.size() << "\n";
  return 0;
}

int cmd_verify_cert(const std::string& path) {
  CertificateCheck check =
      verify_certificate(certificate_from_json(read_text(path)));
  if (!check) {
    std::cerr << "ERR " << error_code_name(ErrorCode::kBadCertificate) << ": "
              << check.diagnostic << "\n";
    return kDomainError;
  }
  std::cout << "valid\n";
  return 0;
}

int cmd_expand(const std::string& file, bool all) {
  Sphere s = load(file);
  if (all) {
    std::cout << "bound: " << expansion_bound(s) << "\n";
    auto list = all_splits(s);
    std::cout << "splits: " << list.size() << "\n";
    for (const Expansion& e : list) {
      std::cout << e.spec.w << " " << e.spec.a << " " << e.spec.b << " "
                << (is_flag(e.sphere) ? "flag" : "non-flag") << "\n";
    }
    return 0;
  }
  auto list = flag_expansions(s);
  std::cout << "bound: " << expansion_bound(s) << "\n";
  std::cout << "expansions: " << list.size() << "\n";
  for (const Expansion& e : list) {
    std::cout << e.spec.w << " " << e.spec.a << " " << e.spec.b << "\n";
  }
  return 0;
}

int cmd_enumerate(std::size_t max_n, bool flag_only, std::size_t jobs,
                  const std::string& corpus_path, const std::string& tsv_path) {
  std::vector<Sphere> corpus;
  for (Sphere& s : oracle::enumerate_all_spheres(max_n, jobs)) {
    if (!flag_only || is_flag(s)) corpus.push_back(std::move(s));
  }
  std::map<std::size_t, std::size_t> counts;
  for (const Sphere& s : corpus) ++counts[s.num_vertices()];
  std::string tsv = "n\tcount\n";
  for (const auto& [n, c] : counts) {
    tsv += std::to_string(n) + "\t" + std::to_string(c) + "\n";
  }
  write_text(corpus_path, to_corpus(corpus));
  if (!tsv_path.empty()) write_text(tsv_path, tsv);
  return 0;
}

int cmd_hasse(std::size_t max_n, std::size_t jobs, const std::string& dot,
              const std::string& json, const std::string& tsv) {
  HasseGraph g = build_hasse(max_n, jobs);
  if (!dot.empty()) write_text(dot, export_dot(g));
  if (!json.empty()) write_text(json, export_json(g));
  if (!tsv.empty()) write_text(tsv, export_levels_tsv(g));

  std::cout << "levels:";
  for (const auto& [n, c] : g.level_counts()) std::cout << " " << n << ":" << c;
  std::cout << "\narcs: " << g.arcs.size() << "\n";

  DegreeReport report = verify_degree_bounds(g);
  for (const NodeBounds& b : report.nodes) {
    if (!b.in_ok) {
      std::cout << "violation: in-degree " << b.in_degree << " > "
                << b.in_bound << " at " << b.form.to_hex() << "\n";
    }
    if (!b.out_ok) {
      std::cout << "violation: out-degree " << b.out_degree << " > "
                << b.out_bound << " at " << b.form.to_hex() << "\n";
    }
  }
  std::cout << "sources: " << report.sources.size() << "\n";
  if (!report.ok()) {
    std::cout << "bounds: FAILED\n";
    std::cerr << "ERR bound-violation: " << report.violations
              << " degree bound violation(s), " << report.sources.size()
              << " source(s)\n";
    return kDomainError;
  }
  std::cout << "bounds: ok\n";
  return 0;
}

int cmd_canon(const std::string& file) {
  std::cout << canonical_form(load(file)).to_hex() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Flag simplicial 2-spheres: contraction, belts, expansion and "
               "the Hasse graph of the contraction order"};
  app.require_subcommand(1);
  std::function<int()> action;

  std::string file;
  auto add_file = [&](CLI::App* sub) {
    sub->add_option("FILE", file, ".tri file, or - for stdin")->required();
  };

  auto* validate = app.add_subcommand("validate", "Check a .tri file");
  add_file(validate);
  validate->callback([&] { action = [&] { return cmd_validate(file); }; });

  auto* flag = app.add_subcommand("flag", "Flagness and missing triangles");
  add_file(flag);
  flag->callback([&] { action = [&] { return cmd_flag(file); }; });

  auto* belt = app.add_subcommand("belts", "Belts and belt-free edges");
  add_file(belt);
  belt->callback([&] { action = [&] { return cmd_belts(file); }; });

  std::uint32_t u = 0;
  std::uint32_t v = 0;
  auto* contract_cmd = app.add_subcommand("contract", "Contract edge {u,v}");
  add_file(contract_cmd);
  contract_cmd->add_option("u", u)->required();
  contract_cmd->add_option("v", v)->required();
  contract_cmd->callback(
      [&] { action = [&] { return cmd_contract(file, u, v); }; });

  std::string cert_out;
  auto* reduce = app.add_subcommand("reduce", "Reduce to the octahedron");
  add_file(reduce);
  reduce->add_option("--cert", cert_out, "Write the certificate JSON here");
  reduce->callback([&] { action = [&] { return cmd_reduce(file, cert_out); }; });

  std::string cert_in;
  auto* verify = app.add_subcommand("verify-cert", "Replay a certificate");
  verify->add_option("CERT", cert_in)->required();
  verify->callback([&] { action = [&] { return cmd_verify_cert(cert_in); }; });

  bool all = false;
  auto* expand = app.add_subcommand("expand", "Flag expansions (vertex splits)");
  add_file(expand);
  expand->add_flag("--all", all, "List every split, flag or not");
  expand->callback([&] { action = [&] { return cmd_expand(file, all); }; });

  std::size_t max_n = 0;
  std::size_t jobs = 1;
  bool flag_only = false;
  std::string corpus_out = "-";
  std::string tsv_out;
  auto* enumerate =
      app.add_subcommand("enumerate", "Brute-force sphere enumeration");
  enumerate->add_option("--max-n", max_n)->required();
  enumerate->add_flag("--flag-only", flag_only);
  enumerate->add_option("--jobs", jobs)->check(CLI::PositiveNumber);
  enumerate->add_option("--corpus", corpus_out, "Corpus dump (default stdout)");
  enumerate->add_option("--tsv", tsv_out, "Per-n counts");
  enumerate->callback([&] {
    action = [&] {
      return cmd_enumerate(max_n, flag_only, jobs, corpus_out, tsv_out);
    };
  });

  std::string dot_out;
  std::string json_out;
  auto* hasse = app.add_subcommand("hasse", "Build and check the Hasse graph");
  hasse->add_option("--max-n", max_n)->required();
  hasse->add_option("--jobs", jobs)->check(CLI::PositiveNumber);
  hasse->add_option("--dot", dot_out);
  hasse->add_option("--json", json_out);
  hasse->add_option("--tsv", tsv_out);
  hasse->callback([&] {
    action = [&] { return cmd_hasse(max_n, jobs, dot_out, json_out, tsv_out); };
  });

  auto* canon = app.add_subcommand("canon", "Canonical form as hex");
  add_file(canon);
  canon->callback([&] { action = [&] { return cmd_canon(file); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kUsageError;
  }

  try {
    return action();
  } catch (const Error& e) {
    std::cerr << "ERR " << error_code_name(e.code()) << ": " << e.what()
              << "\n";
    return kDomainError;
  }
}
