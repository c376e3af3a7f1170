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

// Reference implementations used only by the tests.

#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <queue>
#include <random>
#include <vector>

#include "qec/qec.hpp"

namespace qec::oracle {

/// Runs fn and returns the code of the Error it throws, if any.
template <class F>
std::optional<Errc> error_code(F&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

/// Floyd-Warshall all-pairs distances; -1 for unreachable.
inline std::vector<std::vector<int>> floyd(const Graph& g) {
  const std::size_t n = g.order();
  constexpr int kInf = 1 << 20;
  std::vector<std::vector<int>> d(n, std::vector<int>(n, kInf));
  for (std::size_t v = 0; v < n; ++v) d[v][v] = 0;
  for (auto [u, v] : g.edges()) d[u][v] = d[v][u] = 1;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  for (auto& row : d)
    for (int& x : row)
      if (x >= kInf) x = -1;
  return d;
}

/// Literal quantifier evaluation of the qcc definition.
inline VertexSet brute_qcc(const Graph& g, const VertexSet& s) {
  const auto d = floyd(g);
  VertexSet out;
  for (Vertex u = 0; u < g.order(); ++u) {
    bool all_v = true;
    for (Vertex v = 0; v < g.order(); ++v) {
      bool some_s = false;
      for (const Vertex t : s) some_s = some_s || d[u][t] >= d[v][t];
      all_v = all_v && some_s;
    }
    if (all_v) out.push_back(u);
  }
  return out;
}

inline std::vector<int> eccentricities(const Graph& g) {
  const auto d = floyd(g);
  std::vector<int> out;
  for (const auto& row : d) out.push_back(*std::max_element(row.begin(), row.end()));
  return out;
}

/// Backtracking isomorphism test over vertex bijections.
inline bool isomorphic(const Graph& a, const Graph& b) {
  const std::size_t n = a.order();
  if (n != b.order() || a.size() != b.size()) return false;
  std::vector<std::size_t> da, db;
  for (Vertex v = 0; v < n; ++v) {
    da.push_back(a.degree(v));
    db.push_back(b.degree(v));
  }
  auto sa = da, sb = db;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa != sb) return false;
  std::vector<int> map(n, -1);
  std::vector<std::uint8_t> used(n, 0);
  auto extend = [&](auto&& self, Vertex v) -> bool {
    if (v == n) return true;
    for (Vertex w = 0; w < n; ++w) {
      if (used[w] || da[v] != db[w]) continue;
      bool ok = true;
      for (Vertex p = 0; p < v && ok; ++p) ok = a.adjacent(p, v) == b.adjacent(static_cast<Vertex>(map[p]), w);
      if (!ok) continue;
      map[v] = static_cast<int>(w);
      used[w] = 1;
      if (self(self, v + 1)) return true;
      used[w] = 0;
    }
    map[v] = -1;
    return false;
  };
  return extend(extend, 0);
}

/// Representatives of the isomorphism classes among `graphs`.
inline std::vector<Graph> iso_classes(const std::vector<Graph>& graphs) {
  std::vector<Graph> reps;
  for (const Graph& g : graphs) {
    if (std::none_of(reps.begin(), reps.end(), [&](const Graph& r) { return isomorphic(r, g); })) reps.push_back(g);
  }
  return reps;
}

/// Calls f on every graph of order n whose edge set has exactly m edges.
template <class F>
void for_each_graph(std::size_t n, std::size_t m, F&& f) {
  std::vector<Edge> pairs;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  std::vector<std::uint8_t> pick(pairs.size(), 0);
  std::fill(pick.end() - static_cast<std::ptrdiff_t>(m), pick.end(), 1);
  do {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if (pick[i]) edges.push_back(pairs[i]);
    f(Graph::build(n, edges));
  } while (std::next_permutation(pick.begin(), pick.end()));
}

/// Every labelled graph with n vertices and 3n-6 edges that the recognizer
/// accepts, bucketed by brute-force isomorphism. Independent of flip search
/// and canonical codes.
inline std::vector<Graph> exhaustive_mpgs(std::size_t n) {
  std::vector<Graph> found;
  for_each_graph(n, 3 * n - 6, [&](const Graph& g) {
    if (!g.connected()) return;
    try {
      mpg_faces(g);
      found.push_back(g);
    } catch (const Error&) {
    }
  });
  return iso_classes(found);
}

/// Connected graphs of order n up to isomorphism.
inline std::vector<Graph> connected_graphs(std::size_t n) {
  std::map<std::vector<std::size_t>, std::vector<Graph>> buckets;
  std::size_t pairs = n * (n - 1) / 2;
  for (std::size_t m = n - 1; m <= pairs; ++m) {
    for_each_graph(n, m, [&](const Graph& g) {
      if (!g.connected()) return;
      std::vector<std::size_t> key{g.size()};
      for (Vertex v = 0; v < n; ++v) key.push_back(g.degree(v));
      std::sort(key.begin() + 1, key.end());
      auto& bucket = buckets[key];
      if (std::none_of(bucket.begin(), bucket.end(), [&](const Graph& r) { return isomorphic(r, g); })) bucket.push_back(g);
    });
  }
  std::vector<Graph> out;
  for (auto& [k, b] : buckets) out.insert(out.end(), b.begin(), b.end());
  return out;
}

/// Random connected graph: a random spanning tree plus extra random edges.
inline Graph random_connected(std::mt19937& rng, std::size_t n, double extra_density) {
  std::vector<Edge> edges;
  std::vector<std::vector<std::uint8_t>> has(n, std::vector<std::uint8_t>(n, 0));
  for (Vertex v = 1; v < n; ++v) {
    const Vertex p = std::uniform_int_distribution<Vertex>(0, v - 1)(rng);
    edges.emplace_back(p, v);
    has[p][v] = has[v][p] = 1;
  }
  std::bernoulli_distribution coin(extra_density);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (!has[u][v] && coin(rng)) edges.emplace_back(u, v);
  return Graph::build(n, edges);
}

/// Random maximal planar graph: random face insertions followed by random flips.
inline PlaneGraph random_mpg(std::mt19937& rng, std::size_t n, std::size_t flips) {
  std::vector<Edge> edges{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  PlaneGraph pg = mpg_faces(Graph::build(4, edges));
  for (Vertex v = 4; v < n; ++v) {
    const auto faces = pg.faces();
    const FaceRef& f = faces[std::uniform_int_distribution<std::size_t>(0, faces.size() - 1)(rng)];
    edges = pg.graph().edges();
    for (const Vertex b : f.boundary) edges.emplace_back(b, v);
    pg = mpg_faces(Graph::build(v + 1, edges));
  }
  for (std::size_t i = 0; i < flips; ++i) {
    const auto& es = pg.graph().edges();
    const Edge e = es[std::uniform_int_distribution<std::size_t>(0, es.size() - 1)(rng)];
    if (auto next = diagonal_flip(pg, e)) pg = std::move(*next);
  }
  return pg;
}

/// Relabels g by a random permutation.
inline Graph shuffled(std::mt19937& rng, const Graph& g) {
  std::vector<Vertex> perm(g.order());
  for (Vertex v = 0; v < perm.size(); ++v) perm[v] = v;
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
  return Graph::build(g.order(), edges);
}

}  // namespace qec::oracle
