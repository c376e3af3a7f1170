// Copyright 2026 The qecenter Authors
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

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qec/error.hpp"
#include "qec/graph.hpp"
#include "qec/plane.hpp"

namespace qec {

struct QccResult {
  VertexSet target;
  VertexSet qcc;  // quasi-eccentric vertices of the target
  VertexSet ecc;  // vertices at maximum distance from the target
  Hops e = 0;     // d(S, ecc(S))
  Hops q = 0;     // d(S, qcc(S))
};

/// u is quasi-eccentric to S when every vertex v has some s in S with
/// d(u, s) >= d(v, s). Checked directly against the distance matrix.
inline QccResult qcc_set(const Graph& g, std::span<const Vertex> s) {
  if (s.empty()) throw Error(Errc::EmptySet, "qcc of an empty set");
  if (!g.connected()) throw Error(Errc::Disconnected, "qcc needs a connected graph");
  QccResult out;
  out.target = make_vertex_set(std::vector<Vertex>(s.begin(), s.end()));
  for (const Vertex t : out.target) {
    if (t >= g.order()) throw Error(Errc::OutOfRange, "target vertex " + std::to_string(t));
  }
  const auto& d = g.distances();
  const std::size_t n = g.order();

  std::vector<Hops> to_set(n);
  for (Vertex v = 0; v < n; ++v) to_set[v] = vertex_set_distance(g, v, out.target);
  out.e = *std::max_element(to_set.begin(), to_set.end());

  for (Vertex u = 0; u < n; ++u) {
    bool quasi = true;
    for (Vertex v = 0; v < n && quasi; ++v) {
      quasi = std::any_of(out.target.begin(), out.target.end(), [&](Vertex t) { return d.hops(u, t) >= d.hops(v, t); });
    }
    if (quasi) out.qcc.push_back(u);
    if (to_set[u] == out.e) out.ecc.push_back(u);
  }
  out.q = out.e;
  for (const Vertex u : out.qcc) out.q = std::min(out.q, to_set[u]);
  return out;
}

/// (d(u,x), d(u,y), d(u,z)) for a triangular face with sorted boundary x < y < z.
using DistanceVector = std::array<Hops, 3>;

inline DistanceVector distance_vector(const Graph& g, Vertex u, const FaceRef& face) {
  if (!face.is_triangle()) throw Error(Errc::NotTriangle, "face " + std::to_string(face.id) + " is not a triangle");
  const auto& d = g.distances();
  return {d.hops(u, face.boundary[0]), d.hops(u, face.boundary[1]), d.hops(u, face.boundary[2])};
}

/// Bit i of a mask refers to face position i: x = 1, y = 2, z = 4.
using PositionMask = std::uint8_t;
inline constexpr PositionMask kAllPositions = 7;

/// A (k)-class: distance level k + offset, and the face positions realizing it.
struct ClassKey {
  std::uint8_t offset = 0;  // 0 for level k, 1 for level k+1
  PositionMask near = 0;

  friend auto operator<=>(const ClassKey&, const ClassKey&) = default;
};

inline std::string class_name(ClassKey key) {
  static constexpr std::string_view kLetters = "xyz";
  std::string sub;
  std::string sup;
  for (int i = 0; i < 3; ++i) ((key.near >> i) & 1 ? sub : sup) += kLetters[i];
  std::string out = key.offset == 0 ? "(k)_" : "(k+1)_";
  out += sub;
  if (!sup.empty()) out += "^" + sup;
  return out;
}

struct FaceConfiguration {
  FaceRef face;
  Hops k = 0;
  VertexSet qcc;
  std::map<ClassKey, VertexSet> classes;  // only non-empty classes are stored
  std::map<Vertex, ClassKey> membership;
  std::set<DistanceVector> vectors;

  const VertexSet& members(ClassKey key) const {
    static const VertexSet kEmpty;
    auto it = classes.find(key);
    return it == classes.end() ? kEmpty : it->second;
  }
  bool nonempty(std::uint8_t offset, PositionMask near) const { return classes.contains(ClassKey{offset, near}); }

  /// Level-k members whose near set contains every position in `mask`.
  bool level_k_touches(PositionMask mask) const {
    return std::any_of(classes.begin(), classes.end(),
                       [&](const auto& kv) { return kv.first.offset == 0 && (kv.first.near & mask) == mask; });
  }
  bool has_upper_level() const {
    return std::any_of(classes.begin(), classes.end(), [](const auto& kv) { return kv.first.offset == 1; });
  }
};

namespace detail {

[[noreturn]] inline void invariant_failure(const FaceConfiguration& cfg, const std::string& what) {
  std::string face;
  for (const Vertex v : cfg.face.boundary) face += (face.empty() ? "" : ",") + std::to_string(v);
  throw Error(Errc::InternalInvariantViolation, "face {" + face + "}: " + what);
}

inline constexpr PositionMask bit(int i) { return static_cast<PositionMask>(1u << i); }

inline void check_configuration(const FaceConfiguration& cfg) {
  if (cfg.nonempty(0, kAllPositions) && cfg.has_upper_level()) {
    invariant_failure(cfg, "(k)_xyz coexists with level k+1 members");
  }
  for (PositionMask near = 1; near < kAllPositions; ++near) {
    if (cfg.nonempty(0, near) && cfg.nonempty(1, near)) {
      invariant_failure(cfg, class_name({0, near}) + " and " + class_name({1, near}) + " both occupied");
    }
  }
  int singles = 0;
  for (int p = 0; p < 3; ++p) {
    if (!cfg.nonempty(1, bit(p))) continue;
    ++singles;
    if (cfg.level_k_touches(bit(p))) invariant_failure(cfg, class_name({1, bit(p)}) + " occupied beside level k at the same vertex");
  }
  if (singles == 3) invariant_failure(cfg, "all three single-subscript k+1 classes occupied");
  for (int p = 0; p < 3; ++p) {
    const int q = (p + 1) % 3;
    const int r = (p + 2) % 3;
    if (cfg.nonempty(1, bit(p)) && cfg.nonempty(1, bit(q))) {
      for (PositionMask pair : {PositionMask(3), PositionMask(5), PositionMask(6)}) {
        if (cfg.level_k_touches(pair)) invariant_failure(cfg, "two-subscript level k class beside two k+1 singles");
      }
      if (!cfg.nonempty(0, bit(r))) invariant_failure(cfg, class_name({0, bit(r)}) + " empty beside two k+1 singles");
    }
  }
}

}  // namespace detail

/// Sorts every quasi-eccentric vertex of the face into its (k)-class and
/// checks the configuration constraints that hold for maximal plane graphs.
inline FaceConfiguration face_configuration(const PlaneGraph& h, const FaceRef& face) {
  if (h.order() < 4 || !h.all_faces_triangles()) {
    throw Error(Errc::NotMaximalPlanar, "configurations are defined on maximal plane graphs of order at least 4");
  }
  if (!face.is_triangle()) throw Error(Errc::NotTriangle, "face " + std::to_string(face.id) + " is not a triangle");
  const Graph& g = h.graph();
  const QccResult res = qcc_set(g, face.boundary);

  FaceConfiguration cfg;
  cfg.face = face;
  cfg.k = res.q;
  cfg.qcc = res.qcc;
  for (const Vertex u : res.qcc) {
    const DistanceVector dv = distance_vector(g, u, face);
    const Hops m = *std::min_element(dv.begin(), dv.end());
    ClassKey key;
    if (m < cfg.k || m > cfg.k + 1) detail::invariant_failure(cfg, "vertex " + std::to_string(u) + " outside levels k, k+1");
    key.offset = static_cast<std::uint8_t>(m - cfg.k);
    for (int i = 0; i < 3; ++i) {
      if (dv[i] == m) {
        key.near |= detail::bit(i);
      } else if (dv[i] != m + 1) {
        detail::invariant_failure(cfg, "vertex " + std::to_string(u) + " has a distance vector spread beyond 1");
      }
    }
    cfg.classes[key].push_back(u);
    cfg.membership[u] = key;
    cfg.vectors.insert(dv);
  }
  detail::check_configuration(cfg);
  return cfg;
}

enum class CaseKind { Case1, Case3, Case4_1, Case4_2, Case5_1, Case5_2, Case5_3, Case6 };

constexpr std::string_view to_string(CaseKind kind) {
  switch (kind) {
    case CaseKind::Case1: return "Case1";
    case CaseKind::Case3: return "Case3";
    case CaseKind::Case4_1: return "Case4_1";
    case CaseKind::Case4_2: return "Case4_2";
    case CaseKind::Case5_1: return "Case5_1";
    case CaseKind::Case5_2: return "Case5_2";
    case CaseKind::Case5_3: return "Case5_3";
    case CaseKind::Case6: return "Case6";
  }
  return "Unknown";
}

/// The case of a configuration and the relabelling that puts it in normal
/// form: role r (0 = x, 1 = y, 2 = z) is played by face position relabel[r].
struct CaseLabel {
  CaseKind kind = CaseKind::Case1;
  std::array<std::uint8_t, 3> relabel{0, 1, 2};

  /// Translates a role mask into a face-position mask.
  PositionMask to_positions(PositionMask roles) const {
    PositionMask out = 0;
    for (int r = 0; r < 3; ++r) {
      if ((roles >> r) & 1) out |= detail::bit(relabel[r]);
    }
    return out;
  }
  friend bool operator==(const CaseLabel&, const CaseLabel&) = default;
};

namespace detail {

inline bool case_matches(const FaceConfiguration& cfg, CaseKind kind, const CaseLabel& lab) {
  auto up = [&](PositionMask roles) { return cfg.nonempty(1, lab.to_positions(roles)); };
  auto low = [&](PositionMask roles) { return cfg.nonempty(0, lab.to_positions(roles)); };
  constexpr PositionMask X = 1, Y = 2, Z = 4;
  switch (kind) {
    case CaseKind::Case1: return !cfg.has_upper_level();
    case CaseKind::Case3: return up(X) && up(Y) && !up(Z);
    case CaseKind::Case4_1: return up(X) && !up(Y) && !up(Z) && !low(Y | Z);
    case CaseKind::Case4_2: return up(X) && !up(Y) && !up(Z) && low(Y | Z);
    case CaseKind::Case5_1: return !up(X) && !up(Y) && !up(Z) && up(X | Y) && up(X | Z) && up(Y | Z);
    case CaseKind::Case5_2: return !up(X) && !up(Y) && !up(Z) && up(X | Y) && up(X | Z) && !up(Y | Z);
    case CaseKind::Case5_3: return !up(X) && !up(Y) && !up(Z) && up(X | Y) && !up(X | Z) && !up(Y | Z);
    case CaseKind::Case6:
      return cfg.has_upper_level() && std::all_of(cfg.classes.begin(), cfg.classes.end(), [](const auto& kv) {
               return kv.first.offset == 0 || kv.first.near == kAllPositions;
             });
  }
  return false;
}

}  // namespace detail

/// Picks the case of the exhaustive list that the configuration falls in.
/// Among relabellings that realize it, the lexicographically least is used.
inline CaseLabel classify_case(const FaceConfiguration& cfg) {
  CaseKind kind;
  if (!cfg.has_upper_level()) {
    kind = CaseKind::Case1;
  } else {
    int singles = 0;
    int pairs = 0;
    for (int p = 0; p < 3; ++p) singles += cfg.nonempty(1, detail::bit(p)) ? 1 : 0;
    for (PositionMask pair : {PositionMask(3), PositionMask(5), PositionMask(6)}) pairs += cfg.nonempty(1, pair) ? 1 : 0;
    if (singles == 3) throw Error(Errc::UnclassifiableConfiguration, "three single-subscript k+1 classes occupied");
    if (singles == 2) {
      kind = CaseKind::Case3;
    } else if (singles == 1) {
      const bool dual = [&] {
        for (int p = 0; p < 3; ++p) {
          if (cfg.nonempty(1, detail::bit(p))) return cfg.nonempty(0, static_cast<PositionMask>(kAllPositions & ~detail::bit(p)));
        }
        return false;
      }();
      kind = dual ? CaseKind::Case4_2 : CaseKind::Case4_1;
    } else {
      static constexpr CaseKind kByPairs[] = {CaseKind::Case6, CaseKind::Case5_3, CaseKind::Case5_2, CaseKind::Case5_1};
      kind = kByPairs[pairs];
    }
  }
  CaseLabel label{kind, {0, 1, 2}};
  do {
    if (detail::case_matches(cfg, kind, label)) return label;
  } while (std::next_permutation(label.relabel.begin(), label.relabel.end()));
  throw Error(Errc::UnclassifiableConfiguration, "no relabelling realizes " + std::string(to_string(kind)));
}

}  // namespace qec
