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

// Golden-file tests for the command-line tool. Every command's stdout is
// compared byte for byte with tests/golden.

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "flagsphere/canonical.hpp"
#include "flagsphere/tri_io.hpp"
#include "support/fixtures.hpp"

namespace {

namespace stdfs = std::filesystem;

const stdfs::path kData = FLAGSPHERE_TEST_DATA;
const stdfs::path kGolden = FLAGSPHERE_GOLDEN;
const std::string kCli = FLAGSPHERE_CLI;

std::string slurp(const stdfs::path& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE_MESSAGE(in.good(), "cannot read " << path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct Run {
  int status = -1;
  std::string out;
  std::string err;
};

stdfs::path scratch() {
  static const stdfs::path dir = [] {
    auto d = stdfs::temp_directory_path() /
             ("flagsphere_cli_" + std::to_string(::getpid()));
    stdfs::create_directories(d);
    return d;
  }();
  return dir;
}

// Runs the CLI from the data directory.
Run run(const std::string& args, const std::string& stdin_file = "") {
  const auto out = scratch() / "stdout";
  const auto err = scratch() / "stderr";
  std::string cmd = "cd '" + kData.string() + "' && '" + kCli + "' " + args +
                    " > '" + out.string() + "' 2> '" + err.string() + "'";
  if (!stdin_file.empty()) cmd += " < '" + stdin_file + "'";
  int raw = std::system(cmd.c_str());
  Run r;
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  r.out = slurp(out);
  r.err = slurp(err);
  return r;
}

void check_golden(const std::string& args, const std::string& golden) {
  CAPTURE(args);
  Run r = run(args);
  CHECK(r.status == 0);
  CHECK(r.err.empty());
  CHECK(r.out == slurp(kGolden / golden));
}

bool starts_with(const std::string& s, const std::string& prefix) {
  return s.compare(0, prefix.size(), prefix) == 0;
}

}  // namespace

TEST_CASE("golden outputs") {
  check_golden("validate s7.tri", "validate_s7.out");
  check_golden("flag bipyramid.tri", "flag_bipyramid.out");
  check_golden("flag octahedron.tri", "flag_octahedron.out");
  check_golden("belts octahedron.tri", "belts_octahedron.out");
  check_golden("belts s7.tri", "belts_s7.out");
  check_golden("contract s7.tri 0 6", "contract_s7_0_6.out");
  check_golden("contract octahedron.tri 0 1", "contract_octahedron_0_1.out");
  check_golden("reduce octahedron.tri", "reduce_octahedron.out");
  check_golden("expand octahedron.tri", "expand_octahedron.out");
  check_golden("expand octahedron.tri --all", "expand_octahedron_all.out");
  check_golden("canon s7.tri", "canon_s7.out");
  check_golden("enumerate --max-n 6", "enumerate6.tri");
}

TEST_CASE("stdin input") {
  Run r = run("validate -", (kData / "octahedron.tri").string());
  CHECK(r.status == 0);
  CHECK(r.out == "V=6 E=12 F=8\n");
}

TEST_CASE("reduce writes a certificate that verifies") {
  const auto cert = scratch() / "s7_cert.json";
  Run r = run("reduce s7.tri --cert '" + cert.string() + "'");
  CHECK(r.status == 0);
  CHECK(r.out == slurp(kGolden / "reduce_s7.out"));
  CHECK(slurp(cert) == slurp(kGolden / "s7_cert.json"));

  Run v = run("verify-cert '" + cert.string() + "'");
  CHECK(v.status == 0);
  CHECK(v.out == "valid\n");
}

TEST_CASE("tampered certificate is rejected") {
  std::string text = slurp(kGolden / "s7_cert.json");
  // Swap the step edge {0,2} for {0,1}, which lies in a belt.
  auto pos = text.find("\"edge\": [\n        0,\n        2");
  REQUIRE(pos != std::string::npos);
  text[text.find('2', pos + 10)] = '1';
  const auto cert = scratch() / "tampered.json";
  std::ofstream(cert) << text;
  Run v = run("verify-cert '" + cert.string() + "'");
  CHECK(v.status == 1);
  CHECK(starts_with(v.err, "ERR bad-certificate: step 0:"));
}

TEST_CASE("hasse exports") {
  const auto dot = scratch() / "g.dot";
  const auto json = scratch() / "g.json";
  const auto tsv = scratch() / "g.tsv";
  Run r = run("hasse --max-n 7 --dot '" + dot.string() + "' --json '" +
              json.string() + "' --tsv '" + tsv.string() + "'");
  CHECK(r.status == 0);
  CHECK(r.out == slurp(kGolden / "hasse7.out"));
  CHECK(slurp(dot) == slurp(kGolden / "hasse7.dot"));
  CHECK(slurp(json) == slurp(kGolden / "hasse7.json"));
  CHECK(slurp(tsv) == slurp(kGolden / "hasse7.tsv"));
}

TEST_CASE("enumerate level counts") {
  const auto tsv = scratch() / "levels.tsv";
  Run r = run("enumerate --max-n 6 --tsv '" + tsv.string() + "'");
  CHECK(r.status == 0);
  CHECK(slurp(tsv) == slurp(kGolden / "enumerate6.tsv"));

  Run flag = run("enumerate --max-n 7 --flag-only --jobs 2");
  CHECK(flag.status == 0);
  auto spheres = flagsphere::parse_corpus(flag.out);
  REQUIRE(spheres.size() == 2);
  CHECK(flagsphere::isomorphic(spheres[0], flagsphere::octahedron()));
  CHECK(flagsphere::isomorphic(spheres[1], flagsphere::testing::s7()));
}

TEST_CASE("domain errors") {
  struct Case {
    std::string args;
    std::string prefix;
  };
  const Case cases[] = {
      {"contract bipyramid.tri 1 2", "ERR link-condition-violated: "},
      {"contract octahedron.tri 0 5", "ERR not-an-edge: "},
      {"contract octahedron.tri 2 2", "ERR not-an-edge: "},
      {"reduce bipyramid.tri", "ERR not-flag: "},
      {"expand tetrahedron.tri", "ERR not-flag: "},
      {"validate open_disk.tri", "ERR not-a-sphere: edge-degree≠2"},
      {"validate garbled.tri", "ERR parse-error: "},
      {"validate missing.tri", "ERR io-error: "},
      {"hasse --max-n 5", "ERR budget-too-small: "},
      {"enumerate --max-n 12", "ERR budget-too-large: "},
      {"verify-cert octahedron.tri", "ERR bad-certificate: "},
  };
  for (const Case& c : cases) {
    CAPTURE(c.args);
    Run r = run(c.args);
    CHECK(r.status == 1);
    CHECK(r.out.empty());
    CHECK(starts_with(r.err, c.prefix));
    CHECK(r.err.find('\n') == r.err.size() - 1);
  }
}

TEST_CASE("usage errors exit 2") {
  CHECK(run("").status == 2);
  CHECK(run("frobnicate").status == 2);
  CHECK(run("contract octahedron.tri zero one").status == 2);
  CHECK(run("hasse").status == 2);
  CHECK(run("hasse --max-n 7 --jobs 0").status == 2);
}
