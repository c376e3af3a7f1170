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
#include <cstdint>
#include <cstdlib>
#include <deque>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "qec/criteria.hpp"
#include "qec/error.hpp"
#include "qec/graph.hpp"
#include "qec/plane.hpp"
#include "qec/qcc.hpp"
#include "qec/synthesis.hpp"

namespace qec {

/// Isomorphism invariant of a maximal plane graph: the least BFS encoding of
/// the embedding over every root dart and both orientations.
class CanonicalCode {
 public:
  CanonicalCode() = default;
  explicit CanonicalCode(std::vector<std::uint8_t> bytes) : bytes_(std::move(bytes)) {}

  const std::vector<std::uint8_t>& bytes() const { return bytes_; }

  std::string hex() const {
    static constexpr char kDigits[] = "0123456789abcdef";
    std::string out;
    out.reserve(2 * bytes_.size());
    for (const std::uint8_t b : bytes_) {
      out += kDigits[b >> 4];
      out += kDigits[b & 15];
    }
    return out;
  }

  friend auto operator<=>(const CanonicalCode&, const CanonicalCode&) = default;

 private:
  std::vector<std::uint8_t> bytes_;
};

namespace detail {

// Vertices are numbered from 1 in BFS order; each vertex lists its
// neighbours' numbers in rotation order starting at the vertex it was reached
// from, then a 0 separator.
inline std::vector<std::uint8_t> bfs_code(const PlaneGraph& pg, Vertex root, Vertex first, bool reversed) {
  const std::size_t n = pg.order();
  std::vector<std::uint8_t> number(n, 0);
  std::vector<Vertex> entry(n, 0);
  std::vector<Vertex> order;
  order.reserve(n);
  std::vector<std::uint8_t> code;
  code.reserve(2 * pg.graph().size() + n);
  number[root] = 1;
  entry[root] = first;
  order.push_back(root);
  std::uint8_t next = 2;
  for (std::size_t head = 0; head < order.size(); ++head) {
    const Vertex w = order[head];
    const auto& rot = pg.rotation()[w];
    const std::size_t deg = rot.size();
    const std::size_t start = pg.position(w, entry[w]);
    for (std::size_t step = 0; step < deg; ++step) {
      const Vertex x = rot[reversed ? (start + deg - step) % deg : (start + step) % deg];
      if (number[x] == 0) {
        number[x] = next++;
        entry[x] = w;
        order.push_back(x);
      }
      code.push_back(number[x]);
    }
    code.push_back(0);
  }
  return code;
}

}  // namespace detail

inline CanonicalCode canonical_code(const PlaneGraph& pg) {
  if (pg.order() >= 255) throw Error(Errc::TooLarge, "canonical codes support fewer than 255 vertices");
  std::optional<std::vector<std::uint8_t>> best;
  for (Vertex u = 0; u < pg.order(); ++u) {
    for (const Vertex v : pg.rotation()[u]) {
      for (const bool reversed : {false, true}) {
        auto code = detail::bfs_code(pg, u, v, reversed);
        if (!best || code < *best) best = std::move(code);
      }
    }
  }
  return CanonicalCode(best.value_or(std::vector<std::uint8_t>{}));
}

/// K4 followed by vertices v = 4..n-1, each joined to v-1, v-2 and v-3.
inline PlaneGraph stacked_triangulation(std::size_t n) {
  if (n < 4) throw Error(Errc::TooSmall, "stacked triangulations start at order 4");
  std::vector<Edge> edges{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  for (Vertex v = 4; v < n; ++v) {
    for (Vertex back = 1; back <= 3; ++back) edges.emplace_back(v - back, v);
  }
  return mpg_faces(Graph::build(n, edges));
}

/// Replaces uv by the other diagonal of its two faces. Returns nothing when
/// that diagonal is already an edge.
inline std::optional<PlaneGraph> diagonal_flip(const PlaneGraph& pg, Edge edge) {
  const Graph& g = pg.graph();
  const auto [u, v] = edge;
  if (u >= g.order() || v >= g.order() || !g.adjacent(u, v)) {
    throw Error(Errc::NoSuchEdge, "{" + std::to_string(u) + "," + std::to_string(v) + "} is not an edge");
  }
  auto apex = [&](Vertex a, Vertex b) {
    for (const Vertex w : pg.face_walks()[pg.face_of_dart(a, b)]) {
      if (w != a && w != b) return w;
    }
    throw Error(Errc::NotMaximalPlanar, "face is not a triangle");
  };
  const Vertex w = apex(u, v);
  const Vertex x = apex(v, u);
  if (w == x || g.adjacent(w, x)) return std::nullopt;
  std::vector<Edge> edges;
  edges.reserve(g.size());
  const Edge gone{std::min(u, v), std::max(u, v)};
  for (const Edge& e : g.edges()) {
    if (e != gone) edges.push_back(e);
  }
  edges.emplace_back(w, x);
  return mpg_faces(Graph::build(g.order(), edges, g.labels()));
}

struct EnumeratedMpg {
  CanonicalCode code;
  PlaneGraph plane;
};

inline constexpr std::size_t kMaxEnumerationOrder = 10;

/// Reads QEC_ENUM_BUDGET (graphs expanded); defaults to one million.
inline std::uint64_t enumeration_budget() {
  if (const char* env = std::getenv("QEC_ENUM_BUDGET")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0') return v;
  }
  return 1'000'000;
}

/// One maximal planar graph per isomorphism class of order n, sorted by
/// canonical code. Found by breadth-first search over diagonal flips.
inline std::vector<EnumeratedMpg> enumerate_mpgs(std::size_t n) {
  if (n < 4) throw Error(Errc::TooSmall, "maximal planar enumeration starts at order 4");
  if (n > kMaxEnumerationOrder) {
    throw Error(Errc::BudgetExceeded, "order " + std::to_string(n) + " exceeds the supported maximum of " +
                                          std::to_string(kMaxEnumerationOrder));
  }
  const std::uint64_t budget = enumeration_budget();
  std::map<CanonicalCode, PlaneGraph> seen;
  std::deque<const PlaneGraph*> frontier;
  PlaneGraph seed = stacked_triangulation(n);
  auto [it, inserted] = seen.emplace(canonical_code(seed), std::move(seed));
  frontier.push_back(&it->second);
  std::uint64_t expanded = 0;
  while (!frontier.empty()) {
    if (++expanded > budget) {
      throw Error(Errc::BudgetExceeded, "flip search exceeded budget of " + std::to_string(budget) + " graphs");
    }
    const PlaneGraph& cur = *frontier.front();
    frontier.pop_front();
    for (const Edge& e : cur.graph().edges()) {
      auto flipped = diagonal_flip(cur, e);
      if (!flipped) continue;
      CanonicalCode code = canonical_code(*flipped);
      if (seen.contains(code)) continue;
      auto [pos, fresh] = seen.emplace(std::move(code), std::move(*flipped));
      frontier.push_back(&pos->second);
    }
  }
  std::vector<EnumeratedMpg> out;
  out.reserve(seen.size());
  for (auto& [code, plane] : seen) out.push_back({code, std::move(plane)});
  return out;
}

struct CensusSynthesis {
  bool equi_eccentric = false;
  bool center_subset = false;
  Hops host_radius = 0;
  std::size_t host_order = 0;
};

struct CensusRow {
  CanonicalCode code;
  std::size_t order = 0;
  Hops diameter = 0;
  Hops radius = 0;
  std::size_t center_size = 0;
  bool qef_pass = false;
  VertexSet failing_vertices;
  std::map<CaseKind, std::size_t> case_histogram;
  std::optional<CensusSynthesis> synthesis;
};

struct CensusSummary {
  std::size_t order = 0;
  std::size_t classes = 0;
  std::size_t passes = 0;
  std::size_t failures = 0;
};

struct Census {
  std::vector<CensusRow> rows;
  CensusSummary summary;
};

struct CensusOptions {
  bool synthesize = false;  // build the host for passing classes
  std::optional<Hops> alpha_offset;  // alpha = diam + offset; default 0
};

inline CensusRow census_row(const EnumeratedMpg& m, const CensusOptions& opts = {}) {
  const EccentricityProfile prof = eccentricity_profile(m.plane.graph());
  CensusRow row;
  row.code = m.code;
  row.order = m.plane.order();
  row.diameter = prof.diameter;
  row.radius = prof.radius;
  row.center_size = prof.center.size();
  const Hops alpha = prof.diameter + opts.alpha_offset.value_or(0);
  const CriterionVerdict verdict = qef_criterion(m.plane, alpha);
  row.qef_pass = verdict.pass;
  row.failing_vertices = verdict.failing_vertices;
  for (const FaceRef& f : m.plane.faces()) ++row.case_histogram[classify_case(face_configuration(m.plane, f)).kind];
  if (opts.synthesize && row.qef_pass) {
    const SynthesisReport rep = build_supergraph(m.plane, alpha);
    row.synthesis = CensusSynthesis{rep.equi_eccentric, rep.center_subset, rep.radius, rep.host.order()};
  }
  return row;
}

inline Census census(std::size_t n, const CensusOptions& opts = {}) {
  Census out;
  out.summary.order = n;
  for (const auto& m : enumerate_mpgs(n)) {
    out.rows.push_back(census_row(m, opts));
    ++(out.rows.back().qef_pass ? out.summary.passes : out.summary.failures);
  }
  out.summary.classes = out.rows.size();
  return out;
}

inline std::string histogram_string(const std::map<CaseKind, std::size_t>& hist) {
  std::string out;
  for (const auto& [kind, count] : hist) {
    if (!out.empty()) out += ';';
    out += std::string(to_string(kind)) + ":" + std::to_string(count);
  }
  return out;
}

inline void write_census_csv(std::ostream& os, const Census& c) {
  os << "code,order,diam,radius,center_size,qef_pass,case_histogram\n";
  for (const auto& r : c.rows) {
    os << r.code.hex() << ',' << r.order << ',' << r.diameter << ',' << r.radius << ',' << r.center_size << ','
       << (r.qef_pass ? "true" : "false") << ',' << histogram_string(r.case_histogram) << '\n';
  }
}

}  // namespace qec
