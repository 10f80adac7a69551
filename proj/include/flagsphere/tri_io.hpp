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

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "flagsphere/sphere.hpp"

namespace flagsphere {

// ".tri" text format: first line V, then one face per line as three
// 0-based vertex indices. Lines whose first non-blank character is 'c' are
// comments. Throws Error(kParse) on malformed text and NotASphere when the
// faces do not validate.
Sphere parse_tri(std::string_view text);

// Inverse of parse_tri: parse_tri(to_tri(K)) == K.
std::string to_tri(const Sphere& sphere);

// Corpus dump: .tri blocks separated by one blank line.
std::vector<Sphere> parse_corpus(std::string_view text);
std::string to_corpus(std::span<const Sphere> spheres);

// Reads a whole file, or standard input when path is "-".
// Throws Error(kIo).
std::string read_text(const std::string& path);
void write_text(const std::string& path, std::string_view text);

}  // namespace flagsphere
