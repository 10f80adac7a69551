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

#include <string>

#include "doctest.h"
#include "flagsphere/error.hpp"
#include "flagsphere/tri_io.hpp"
#include "support/fixtures.hpp"

namespace fs = flagsphere;

TEST_CASE("parse with comments and blank lines") {
  const std::string text =
      "c the tetrahedron\n"
      "4\n"
      "\n"
      "0 1 2\r\n"
      "  c indented comment\n"
      "0 1 3\n"
      "0\t2 3\n"
      "1 2 3";
  CHECK(fs::parse_tri(text) == fs::tetrahedron());
}

TEST_CASE("print format") {
  CHECK(fs::to_tri(fs::tetrahedron()) == "4\n0 1 2\n0 1 3\n0 2 3\n1 2 3\n");
}

TEST_CASE("round trip over the corpus") {
  for (const fs::Sphere& s : fs::testing::corpus(9)) {
    std::string text = fs::to_tri(s);
    CHECK(fs::parse_tri(text) == s);
    CHECK(fs::to_tri(fs::parse_tri(text)) == text);
  }
  const auto& all = fs::testing::corpus(8);
  CHECK(fs::parse_corpus(fs::to_corpus(all)) == all);
}

TEST_CASE("malformed text") {
  auto code_of = [](const std::string& text) {
    try {
      fs::parse_tri(text);
    } catch (const fs::Error& e) {
      return e.code();
    }
    return fs::ErrorCode::kIo;
  };
  CHECK(code_of("") == fs::ErrorCode::kParse);
  CHECK(code_of("4 4\n0 1 2\n") == fs::ErrorCode::kParse);
  CHECK(code_of("4\n0 1\n") == fs::ErrorCode::kParse);
  CHECK(code_of("4\n0 1 -2\n") == fs::ErrorCode::kParse);
  CHECK(code_of("4\n0 1 x\n") == fs::ErrorCode::kParse);
  CHECK(code_of("4\n0 1 2\n0 1 3\n0 2 3\n") == fs::ErrorCode::kNotASphere);
}

TEST_CASE("missing file") {
  CHECK_THROWS_AS(fs::read_text("/nonexistent/file.tri"), fs::Error);
}
