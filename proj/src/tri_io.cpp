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

#include "flagsphere/tri_io.hpp"

#include <charconv>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "flagsphere/error.hpp"

namespace flagsphere {
namespace {

struct Line {
  std::size_t number;
  std::string_view text;
};

std::string_view trim(std::string_view s) {
  const char* ws = " \t\r\f\v";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

// Splits into lines, dropping comments but keeping blank lines (as empty
// views) because they separate corpus blocks.
std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  while (!text.empty()) {
    ++number;
    auto nl = text.find('\n');
    std::string_view raw = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{}
                                        : text.substr(nl + 1);
    std::string_view t = trim(raw);
    if (!t.empty() && t.front() == 'c') continue;
    lines.push_back({number, t});
  }
  return lines;
}

std::vector<std::uint64_t> parse_ints(const Line& line) {
  std::vector<std::uint64_t> values;
  std::string_view s = line.text;
  while (true) {
    s = trim(s);
    if (s.empty()) break;
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} ||
        (ptr != s.data() + s.size() && *ptr != ' ' && *ptr != '\t')) {
      throw Error(ErrorCode::kParse, "line " + std::to_string(line.number) +
                                         ": expected non-negative integers");
    }
    values.push_back(value);
    s.remove_prefix(static_cast<std::size_t>(ptr - s.data()));
  }
  return values;
}

Sphere parse_block(std::span<const Line> lines) {
  if (lines.empty()) throw Error(ErrorCode::kParse, "missing vertex count");
  auto header = parse_ints(lines.front());
  if (header.size() != 1) {
    throw Error(ErrorCode::kParse, "line " +
                                       std::to_string(lines.front().number) +
                                       ": expected a single vertex count");
  }
  if (header[0] > 0xffffffffULL) {
    throw Error(ErrorCode::kParse, "vertex count exceeds 32 bits");
  }
  std::vector<Face> faces;
  for (const Line& line : lines.subspan(1)) {
    auto values = parse_ints(line);
    if (values.size() != 3) {
      throw Error(ErrorCode::kParse, "line " + std::to_string(line.number) +
                                         ": expected three vertex indices");
    }
    Face f{};
    for (int i = 0; i < 3; ++i) {
      if (values[i] > 0xffffffffULL) {
        throw Error(ErrorCode::kParse, "line " +
                                           std::to_string(line.number) +
                                           ": vertex index exceeds 32 bits");
      }
      f[i] = static_cast<Vertex>(values[i]);
    }
    faces.push_back(f);
  }
  return Sphere::from_faces(static_cast<std::size_t>(header[0]), faces);
}

}  // namespace

Sphere parse_tri(std::string_view text) {
  std::vector<Line> lines;
  for (const Line& line : content_lines(text)) {
    if (!line.text.empty()) lines.push_back(line);
  }
  return parse_block(lines);
}

std::string to_tri(const Sphere& sphere) {
  std::string out = std::to_string(sphere.num_vertices()) + "\n";
  for (const Face& f : sphere.faces()) {
    out += std::to_string(f[0]) + " " + std::to_string(f[1]) + " " +
           std::to_string(f[2]) + "\n";
  }
  return out;
}

std::vector<Sphere> parse_corpus(std::string_view text) {
  std::vector<Sphere> spheres;
  std::vector<Line> block;
  for (const Line& line : content_lines(text)) {
    if (line.text.empty()) {
      if (!block.empty()) spheres.push_back(parse_block(block));
      block.clear();
    } else {
      block.push_back(line);
    }
  }
  if (!block.empty()) spheres.push_back(parse_block(block));
  return spheres;
}

std::string to_corpus(std::span<const Sphere> spheres) {
  std::string out;
  for (std::size_t i = 0; i < spheres.size(); ++i) {
    if (i > 0) out += "\n";
    out += to_tri(spheres[i]);
  }
  return out;
}

std::string read_text(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text(const std::string& path, std::string_view text) {
  if (path == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kIo, "cannot write " + path);
  out << text;
  if (!out) throw Error(ErrorCode::kIo, "write failed for " + path);
}

}  // namespace flagsphere
