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

#include "flagsphere/canonical.hpp"

#include <algorithm>
#include <optional>

#include "flagsphere/error.hpp"

namespace flagsphere {
namespace {

// Per-vertex rotation with a consistent orientation across the sphere:
// for every face oriented (v, p, q), q follows p in the rotation at v.
class Rotation {
 public:
  explicit Rotation(const Sphere& sphere) : rot_(sphere.num_vertices()) {
    const std::size_t n = sphere.num_vertices();
    if (n == 0) return;
    std::vector<int> dir(n, 0);
    const Face& f0 = sphere.faces().front();
    // Orient vertex f0[0] so that f0[2] follows f0[1].
    dir[f0[0]] = next_in(sphere.link_cycle(f0[0]), f0[1]) == f0[2] ? 1 : -1;
    std::vector<Vertex> queue{f0[0]};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      Vertex v = queue[head];
      auto link = sphere.link_cycle(v);
      for (Vertex w : link) {
        if (dir[w] != 0) continue;
        Vertex x = dir[v] > 0 ? next_in(link, w) : prev_in(link, w);
        // Face (v, w, x) read at w is (w, x, v): v follows x.
        dir[w] = next_in(sphere.link_cycle(w), x) == v ? 1 : -1;
        queue.push_back(w);
      }
    }
    for (Vertex v = 0; v < n; ++v) {
      auto link = sphere.link_cycle(v);
      rot_[v].assign(link.begin(), link.end());
      if (dir[v] < 0) std::reverse(rot_[v].begin(), rot_[v].end());
    }
  }

  const std::vector<Vertex>& at(Vertex v) const { return rot_[v]; }

 private:
  static Vertex next_in(std::span<const Vertex> cycle, Vertex x) {
    auto it = std::find(cycle.begin(), cycle.end(), x);
    ++it;
    return it == cycle.end() ? cycle.front() : *it;
  }
  static Vertex prev_in(std::span<const Vertex> cycle, Vertex x) {
    auto it = std::find(cycle.begin(), cycle.end(), x);
    return it == cycle.begin() ? cycle.back() : *(it - 1);
  }

  std::vector<std::vector<Vertex>> rot_;
};

void put_varint(std::string& out, std::uint64_t value) {
  while (value >= 0x80) {
    out.push_back(static_cast<char>((value & 0x7f) | 0x80));
    value >>= 7;
  }
  out.push_back(static_cast<char>(value));
}

class Canonicalizer {
 public:
  explicit Canonicalizer(const Sphere& sphere)
      : sphere_(sphere), rotation_(sphere) {}

  // Runs every start in the requested directions, keeping the minimum.
  CanonicalLabeling run(bool forward, bool backward) {
    std::optional<CanonicalLabeling> best;
    const auto n = static_cast<Vertex>(sphere_.num_vertices());
    for (int d = 0; d < 2; ++d) {
      bool reversed = d == 1;
      if ((reversed && !backward) || (!reversed && !forward)) continue;
      for (Vertex v = 0; v < n; ++v) {
        for (Vertex w : rotation_.at(v)) {
          label_from(v, w, reversed);
          std::string code = encode();
          if (!best || code < best->form.bytes()) {
            best = CanonicalLabeling{CanonicalForm(std::move(code)), label_};
          }
        }
      }
    }
    if (!best) {
      std::string code;
      put_varint(code, 0);
      put_varint(code, 0);
      best = CanonicalLabeling{CanonicalForm(std::move(code)), {}};
    }
    return *std::move(best);
  }

 private:
  void label_from(Vertex start, Vertex first, bool reversed) {
    const std::size_t n = sphere_.num_vertices();
    constexpr Vertex kUnset = ~Vertex{0};
    label_.assign(n, kUnset);
    reference_.assign(n, 0);
    order_.clear();
    label_[start] = 0;
    reference_[start] = first;
    order_.push_back(start);
    Vertex next = 1;
    for (std::size_t head = 0; head < order_.size(); ++head) {
      Vertex x = order_[head];
      const auto& rot = rotation_.at(x);
      const std::size_t k = rot.size();
      auto pos = static_cast<std::size_t>(
          std::find(rot.begin(), rot.end(), reference_[x]) - rot.begin());
      for (std::size_t step = 0; step < k; ++step) {
        std::size_t i = reversed ? (pos + k - step) % k : (pos + step) % k;
        Vertex y = rot[i];
        if (label_[y] != kUnset) continue;
        label_[y] = next++;
        reference_[y] = x;
        order_.push_back(y);
      }
    }
  }

  std::string encode() {
    faces_.clear();
    for (const Face& f : sphere_.faces()) {
      Face g{label_[f[0]], label_[f[1]], label_[f[2]]};
      std::sort(g.begin(), g.end());
      faces_.push_back(g);
    }
    std::sort(faces_.begin(), faces_.end());
    std::string code;
    code.reserve(2 + 3 * faces_.size());
    put_varint(code, sphere_.num_vertices());
    put_varint(code, faces_.size());
    for (const Face& f : faces_) {
      for (Vertex x : f) put_varint(code, x);
    }
    return code;
  }

  const Sphere& sphere_;
  Rotation rotation_;
  std::vector<Vertex> label_;
  std::vector<Vertex> reference_;
  std::vector<Vertex> order_;
  std::vector<Face> faces_;
};

}  // namespace

std::string CanonicalForm::to_hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(2 * bytes_.size());
  for (char c : bytes_) {
    auto u = static_cast<unsigned char>(c);
    out.push_back(kDigits[u >> 4]);
    out.push_back(kDigits[u & 0xf]);
  }
  return out;
}

CanonicalForm CanonicalForm::from_hex(std::string_view hex) {
  auto nibble = [&](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    throw Error(ErrorCode::kParse, "invalid hex digit in canonical form");
  };
  if (hex.size() % 2 != 0) {
    throw Error(ErrorCode::kParse, "canonical form hex has odd length");
  }
  std::string bytes;
  bytes.reserve(hex.size() / 2);
  for (std::size_t i = 0; i < hex.size(); i += 2) {
    bytes.push_back(static_cast<char>(nibble(hex[i]) * 16 + nibble(hex[i + 1])));
  }
  return CanonicalForm(std::move(bytes));
}

CanonicalLabeling canonical_labeling(const Sphere& sphere) {
  return Canonicalizer(sphere).run(true, true);
}

CanonicalForm canonical_form(const Sphere& sphere) {
  return canonical_labeling(sphere).form;
}

Sphere canonical_sphere(const Sphere& sphere) {
  return relabel(sphere, canonical_labeling(sphere).new_label);
}

bool isomorphic(const Sphere& a, const Sphere& b) {
  if (a.num_vertices() != b.num_vertices() ||
      a.num_faces() != b.num_faces()) {
    return false;
  }
  return canonical_form(a) == canonical_form(b);
}

CanonicalForm oriented_form(const Sphere& sphere, bool reversed) {
  return Canonicalizer(sphere).run(!reversed, reversed).form;
}

}  // namespace flagsphere
