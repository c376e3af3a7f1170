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
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qec/error.hpp"
#include "qec/graph.hpp"
#include "qec/plane.hpp"
#include "qec/qcc.hpp"

namespace qec {

struct CriterionVerdict {
  bool pass = false;
  Hops alpha = 0;
  std::map<Vertex, FaceRef> witness_map;  // u with e_H(u) < alpha -> a face it is quasi-eccentric to
  VertexSet failing_vertices;
  std::optional<Vertex> failing_vertex;  // least failing vertex
};

/// Every vertex of eccentricity below alpha must be quasi-eccentric to some
/// face. Witnesses prefer faces not containing u, then the lowest face id.
inline CriterionVerdict qef_criterion(const PlaneGraph& h, Hops alpha) {
  const EccentricityProfile prof = eccentricity_profile(h.graph());
  if (alpha < prof.diameter) {
    throw Error(Errc::AlphaTooSmall,
                "alpha " + std::to_string(alpha) + " below diameter " + std::to_string(prof.diameter));
  }
  const std::vector<FaceRef> faces = h.faces();
  std::vector<VertexSet> qcc_of(faces.size());
  for (std::size_t f = 0; f < faces.size(); ++f) qcc_of[f] = qcc_set(h.graph(), faces[f].boundary).qcc;

  CriterionVerdict out;
  out.alpha = alpha;
  for (Vertex u = 0; u < h.order(); ++u) {
    if (prof.eccentricity[u] >= alpha) continue;
    std::optional<std::size_t> best;
    for (std::size_t f = 0; f < faces.size(); ++f) {
      if (!contains(qcc_of[f], u)) continue;
      if (!contains(faces[f].boundary, u)) {
        best = f;
        break;
      }
      if (!best) best = f;
    }
    if (best) {
      out.witness_map.emplace(u, faces[*best]);
    } else {
      out.failing_vertices.push_back(u);
    }
  }
  out.pass = out.failing_vertices.empty();
  if (!out.pass) out.failing_vertex = out.failing_vertices.front();
  return out;
}

struct CycleCounterexample {
  std::vector<Vertex> cycle;
  Vertex a = 0;
  Vertex b = 0;
};

struct CycleConditionOptions {
  std::optional<std::size_t> max_len;
  std::uint64_t budget = 20'000'000;  // simple cycles examined before giving up
  bool prune = true;                  // skip lengths that cannot violate the condition
};

struct CycleConditionVerdict {
  bool pass = true;
  std::optional<CycleCounterexample> counterexample;
  std::optional<std::size_t> bound;  // longest cycle length examined; nullopt when unbounded
  bool exact = true;                 // false when a caller cap cut the search short
  std::uint64_t cycles_examined = 0;
};

namespace detail {

// First cross-side pair both farther than diam(C) from the cycle, if any.
inline std::optional<CycleCounterexample> violation_on(const PlaneGraph& h, const std::vector<Vertex>& cycle) {
  const CycleSides sides = cycle_sides(h, cycle);
  if (sides.side_a.empty() || sides.side_b.empty()) return std::nullopt;
  const Hops cdiam = static_cast<Hops>(cycle.size() / 2);
  auto far = [&](const VertexSet& side) -> std::optional<Vertex> {
    for (const Vertex v : side) {
      if (vertex_set_distance(h.graph(), v, cycle) > cdiam) return v;
    }
    return std::nullopt;
  };
  auto a = far(sides.side_a);
  if (!a) return std::nullopt;
  auto b = far(sides.side_b);
  if (!b) return std::nullopt;
  return CycleCounterexample{cycle, *a, *b};
}

}  // namespace detail

/// Searches simple cycles C for vertices a, b on opposite sides with
/// d(a,C) > diam(C) and d(b,C) > diam(C), where diam(C) = floor(|C| / 2).
///
/// Such a pair forces d(a,b) >= 2 floor(|C|/2) + 2, so with pruning on only
/// lengths with floor(|C|/2) <= floor(diam(H)/2) - 1 are enumerated; the
/// verdict stays exact.
inline CycleConditionVerdict cycle_condition(const PlaneGraph& h, const CycleConditionOptions& opts = {}) {
  const Graph& g = h.graph();
  const Hops diam = eccentricity_profile(g).diameter;
  CycleConditionVerdict out;

  std::optional<std::size_t> limit = opts.max_len;
  if (opts.prune) {
    const std::size_t useful = diam / 2 >= 1 ? 2 * (diam / 2 - 1) + 1 : 0;
    if (!limit || *limit >= useful) {
      limit = useful;
    } else {
      out.exact = false;
    }
  } else if (opts.max_len && *opts.max_len < g.order()) {
    out.exact = false;
  }
  out.bound = limit;
  if (limit && *limit < 3) return out;

  const std::size_t n = g.order();
  std::vector<Vertex> path;
  std::vector<std::uint8_t> on_path(n, 0);

  // Each cycle is reported once: from its least vertex, with the second
  // vertex smaller than the last.
  auto dfs = [&](auto&& self, Vertex start, Vertex v) -> bool {
    for (const Vertex w : g.neighbors(v)) {
      if (w == start && path.size() >= 3 && path[1] < path.back()) {
        if (++out.cycles_examined > opts.budget) {
          throw Error(Errc::TooLarge, "cycle budget " + std::to_string(opts.budget) + " exhausted at length bound " +
                                          (limit ? std::to_string(*limit) : std::string("none")));
        }
        if (auto cx = detail::violation_on(h, path)) {
          out.pass = false;
          out.counterexample = std::move(cx);
          return true;
        }
        continue;
      }
      if (w <= start || on_path[w]) continue;
      if (limit && path.size() >= *limit) continue;
      path.push_back(w);
      on_path[w] = 1;
      const bool found = self(self, start, w);
      on_path[w] = 0;
      path.pop_back();
      if (found) return true;
    }
    return false;
  };
  for (Vertex s = 0; s < n; ++s) {
    path.assign(1, s);
    on_path[s] = 1;
    const bool found = dfs(dfs, s, s);
    on_path[s] = 0;
    if (found) break;
  }
  return out;
}

/// False only on an instance where the face criterion passes but the cycle
/// condition fails.
inline bool check_qef_implies_cycle(const PlaneGraph& h, Hops alpha) {
  if (!qef_criterion(h, alpha).pass) return true;
  return cycle_condition(h).pass;
}

inline std::optional<FaceRef> has_dominating_face(const PlaneGraph& h) {
  VertexSet all(h.order());
  for (Vertex v = 0; v < h.order(); ++v) all[v] = v;
  for (const FaceRef& f : h.faces()) {
    if (dominates(h.graph(), f.boundary, all)) return f;
  }
  return std::nullopt;
}

}  // namespace qec
