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
#include <memory>
#include <optional>
#include <queue>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qec/error.hpp"

namespace qec {

using Vertex = std::uint32_t;
using Hops = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Sorted, duplicate-free list of vertices.
using VertexSet = std::vector<Vertex>;

inline VertexSet make_vertex_set(std::vector<Vertex> vertices) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  return vertices;
}

inline bool contains(const VertexSet& set, Vertex v) {
  return std::binary_search(set.begin(), set.end(), v);
}

namespace detail {

// Writes hop counts from `source` into `out`; -1 marks vertices BFS never reached.
inline void bfs_into(const std::vector<std::vector<Vertex>>& adjacency, Vertex source,
                     std::span<std::int32_t> out) {
  std::fill(out.begin(), out.end(), -1);
  std::queue<Vertex> frontier;
  out[source] = 0;
  frontier.push(source);
  while (!frontier.empty()) {
    const Vertex v = frontier.front();
    frontier.pop();
    for (const Vertex w : adjacency[v]) {
      if (out[w] < 0) {
        out[w] = out[v] + 1;
        frontier.push(w);
      }
    }
  }
}

}  // namespace detail

/// All-pairs hop counts. Unreachable pairs are reported as std::nullopt, never
/// as a number.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;

  explicit DistanceMatrix(const std::vector<std::vector<Vertex>>& adjacency)
      : n_(adjacency.size()), raw_(n_ * n_, -1) {
    for (Vertex s = 0; s < n_; ++s) {
      detail::bfs_into(adjacency, s, std::span<std::int32_t>(raw_.data() + std::size_t{s} * n_, n_));
    }
    connected_ = std::none_of(raw_.begin(), raw_.end(), [](std::int32_t d) { return d < 0; });
  }

  std::size_t order() const { return n_; }
  bool connected() const { return connected_; }

  std::optional<Hops> at(Vertex u, Vertex v) const {
    check(u, v);
    const std::int32_t d = raw_[std::size_t{u} * n_ + v];
    if (d < 0) return std::nullopt;
    return static_cast<Hops>(d);
  }

  /// Hop count for a pair that must be connected.
  Hops hops(Vertex u, Vertex v) const {
    const std::int32_t d = raw_[std::size_t{u} * n_ + v];
    if (d < 0) {
      check(u, v);
      throw Error(Errc::Disconnected, "no path between " + std::to_string(u) + " and " + std::to_string(v));
    }
    return static_cast<Hops>(d);
  }

  std::vector<std::optional<Hops>> row(Vertex u) const {
    std::vector<std::optional<Hops>> out(n_);
    for (Vertex v = 0; v < n_; ++v) out[v] = at(u, v);
    return out;
  }

 private:
  void check(Vertex u, Vertex v) const {
    if (u >= n_ || v >= n_) throw Error(Errc::OutOfRange, "vertex index beyond matrix order");
  }

  std::size_t n_ = 0;
  std::vector<std::int32_t> raw_;
  bool connected_ = true;
};

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Edges are stored normalized (u < v) and sorted, so two graphs with the same
/// edge set serialize identically. The distance matrix is computed once at
/// construction and shared by copies.
class Graph {
 public:
  Graph() : Graph(build(1, {})) {}

  static Graph build(std::size_t order, std::span<const Edge> edges, std::vector<std::string> labels = {}) {
    if (order == 0) throw Error(Errc::OutOfRange, "graph order must be at least 1");
    if (!labels.empty() && labels.size() != order) {
      throw Error(Errc::OutOfRange, "label count " + std::to_string(labels.size()) + " differs from order " +
                                        std::to_string(order));
    }
    std::vector<Edge> normalized;
    normalized.reserve(edges.size());
    for (auto [u, v] : edges) {
      if (u >= order || v >= order) {
        throw Error(Errc::OutOfRange, "edge {" + std::to_string(u) + "," + std::to_string(v) + "} outside order " +
                                          std::to_string(order));
      }
      if (u == v) throw Error(Errc::SelfLoop, "self-loop at " + std::to_string(u));
      normalized.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(normalized.begin(), normalized.end());
    if (auto dup = std::adjacent_find(normalized.begin(), normalized.end()); dup != normalized.end()) {
      throw Error(Errc::DuplicateEdge,
                  "edge {" + std::to_string(dup->first) + "," + std::to_string(dup->second) + "} listed twice");
    }

    Graph g(order);
    g.edges_ = std::move(normalized);
    g.labels_ = std::move(labels);
    for (auto [u, v] : g.edges_) {
      g.adjacency_[u].push_back(v);
      g.adjacency_[v].push_back(u);
      g.matrix_[std::size_t{u} * order + v] = 1;
      g.matrix_[std::size_t{v} * order + u] = 1;
    }
    for (auto& list : g.adjacency_) std::sort(list.begin(), list.end());
    g.distances_ = std::make_shared<const DistanceMatrix>(g.adjacency_);
    return g;
  }

  std::size_t order() const { return n_; }
  std::size_t size() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }
  const std::vector<std::vector<Vertex>>& adjacency() const { return adjacency_; }
  std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }

  bool adjacent(Vertex u, Vertex v) const {
    if (u >= n_ || v >= n_) return false;
    return matrix_[std::size_t{u} * n_ + v] != 0;
  }

  bool has_labels() const { return !labels_.empty(); }
  const std::vector<std::string>& labels() const { return labels_; }
  std::string label(Vertex v) const { return labels_.empty() ? std::to_string(v) : labels_.at(v); }

  const DistanceMatrix& distances() const { return *distances_; }
  bool connected() const { return distances_->connected(); }

  /// Structural equality: order and edge set. Labels are cosmetic.
  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

 private:
  explicit Graph(std::size_t order) : n_(order), adjacency_(order), matrix_(order * order, 0) {}

  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<std::uint8_t> matrix_;
  std::vector<std::string> labels_;
  std::shared_ptr<const DistanceMatrix> distances_;
};

inline Graph build_graph(std::size_t order, std::span<const Edge> edges, std::vector<std::string> labels = {}) {
  return Graph::build(order, edges, std::move(labels));
}

inline Graph build_graph(std::size_t order, std::initializer_list<Edge> edges) {
  return Graph::build(order, std::span<const Edge>(edges.begin(), edges.size()));
}

/// Single-source hop counts; unreachable vertices are std::nullopt.
inline std::vector<std::optional<Hops>> bfs_distances(const Graph& g, Vertex source) {
  if (source >= g.order()) throw Error(Errc::OutOfRange, "source " + std::to_string(source) + " not in graph");
  std::vector<std::int32_t> raw(g.order());
  detail::bfs_into(g.adjacency(), source, raw);
  std::vector<std::optional<Hops>> out(g.order());
  for (std::size_t v = 0; v < raw.size(); ++v) {
    if (raw[v] >= 0) out[v] = static_cast<Hops>(raw[v]);
  }
  return out;
}

inline const DistanceMatrix& distance_matrix(const Graph& g) { return g.distances(); }

struct EccentricityProfile {
  std::vector<Hops> eccentricity;
  Hops radius = 0;
  Hops diameter = 0;
  std::map<Hops, VertexSet> layers;
  VertexSet center;

  /// Vertices of eccentricity i (empty when no vertex has it).
  VertexSet layer(Hops i) const {
    auto it = layers.find(i);
    return it == layers.end() ? VertexSet{} : it->second;
  }
};

inline EccentricityProfile eccentricity_profile(const Graph& g) {
  const auto& d = g.distances();
  if (!d.connected()) throw Error(Errc::Disconnected, "eccentricity is undefined on a disconnected graph");
  EccentricityProfile p;
  p.eccentricity.assign(g.order(), 0);
  for (Vertex u = 0; u < g.order(); ++u) {
    Hops e = 0;
    for (Vertex v = 0; v < g.order(); ++v) e = std::max(e, d.hops(u, v));
    p.eccentricity[u] = e;
    p.layers[e].push_back(u);
  }
  p.radius = p.layers.begin()->first;
  p.diameter = p.layers.rbegin()->first;
  p.center = p.layers.begin()->second;
  return p;
}

/// d(v, S) for a non-empty S.
inline Hops vertex_set_distance(const Graph& g, Vertex v, std::span<const Vertex> s) {
  if (s.empty()) throw Error(Errc::EmptySet, "distance to an empty set");
  std::optional<Hops> best;
  for (const Vertex t : s) {
    if (auto d = g.distances().at(v, t); d && (!best || *d < *best)) best = d;
  }
  if (!best) throw Error(Errc::Disconnected, "vertex " + std::to_string(v) + " cannot reach the set");
  return *best;
}

inline Hops set_distance(const Graph& g, std::span<const Vertex> a, std::span<const Vertex> b) {
  if (a.empty() || b.empty()) throw Error(Errc::EmptySet, "set distance needs two non-empty sets");
  std::optional<Hops> best;
  for (const Vertex u : a) {
    for (const Vertex v : b) {
      if (auto d = g.distances().at(u, v); d && (!best || *d < *best)) best = d;
    }
  }
  if (!best) throw Error(Errc::Disconnected, "sets lie in different components");
  return *best;
}

struct Separation {
  bool separates = false;
  std::vector<VertexSet> components;  // components of G - S, each sorted, ordered by least vertex
};

inline Separation is_separating_set(const Graph& g, std::span<const Vertex> s) {
  std::vector<std::uint8_t> removed(g.order(), 0);
  for (const Vertex v : s) {
    if (v >= g.order()) throw Error(Errc::OutOfRange, "separator vertex " + std::to_string(v));
    removed[v] = 1;
  }
  if (std::all_of(removed.begin(), removed.end(), [](std::uint8_t r) { return r != 0; })) {
    throw Error(Errc::EmptySet, "removing the whole vertex set leaves nothing to separate");
  }
  Separation out;
  std::vector<std::uint8_t> seen(removed);
  for (Vertex root = 0; root < g.order(); ++root) {
    if (seen[root]) continue;
    VertexSet component;
    std::queue<Vertex> frontier;
    frontier.push(root);
    seen[root] = 1;
    while (!frontier.empty()) {
      const Vertex v = frontier.front();
      frontier.pop();
      component.push_back(v);
      for (const Vertex w : g.neighbors(v)) {
        if (!seen[w]) {
          seen[w] = 1;
          frontier.push(w);
        }
      }
    }
    std::sort(component.begin(), component.end());
    out.components.push_back(std::move(component));
  }
  out.separates = out.components.size() > 1;
  return out;
}

/// True iff every vertex of `s` lies in the closed neighbourhood N[t].
inline bool dominates(const Graph& g, std::span<const Vertex> t, std::span<const Vertex> s) {
  std::vector<std::uint8_t> covered(g.order(), 0);
  for (const Vertex v : t) {
    if (v >= g.order()) throw Error(Errc::OutOfRange, "dominating vertex " + std::to_string(v));
    covered[v] = 1;
    for (const Vertex w : g.neighbors(v)) covered[w] = 1;
  }
  return std::all_of(s.begin(), s.end(), [&](Vertex v) {
    if (v >= g.order()) throw Error(Errc::OutOfRange, "dominated vertex " + std::to_string(v));
    return covered[v] != 0;
  });
}

/// G x H with vertex (u, v) at index u * |H| + v.
inline Graph cartesian_product(const Graph& g, const Graph& h) {
  const std::size_t nh = h.order();
  std::vector<Edge> edges;
  edges.reserve(g.order() * h.size() + nh * g.size());
  for (Vertex u = 0; u < g.order(); ++u) {
    for (auto [a, b] : h.edges()) edges.emplace_back(u * nh + a, u * nh + b);
  }
  for (auto [a, b] : g.edges()) {
    for (Vertex v = 0; v < nh; ++v) edges.emplace_back(a * nh + v, b * nh + v);
  }
  std::vector<std::string> labels;
  if (g.has_labels() || h.has_labels()) {
    for (Vertex u = 0; u < g.order(); ++u) {
      for (Vertex v = 0; v < nh; ++v) labels.push_back("(" + g.label(u) + "," + h.label(v) + ")");
    }
  }
  return Graph::build(g.order() * nh, edges, std::move(labels));
}

struct IsometryCheck {
  bool isometric = true;
  std::optional<std::pair<Vertex, Vertex>> violation;  // pair of h-vertices whose distances differ
};

/// Checks d_h(u,v) = d_g(f(u),f(v)) for all pairs, where f is `embedding`.
inline IsometryCheck is_isometric_subgraph(const Graph& h, const Graph& g, std::span<const Vertex> embedding) {
  if (embedding.size() != h.order()) throw Error(Errc::NotASubgraphMap, "embedding must map every vertex of h");
  std::vector<std::uint8_t> used(g.order(), 0);
  for (const Vertex image : embedding) {
    if (image >= g.order()) throw Error(Errc::NotASubgraphMap, "image " + std::to_string(image) + " outside g");
    if (used[image]++) throw Error(Errc::NotASubgraphMap, "embedding is not injective at " + std::to_string(image));
  }
  for (auto [u, v] : h.edges()) {
    if (!g.adjacent(embedding[u], embedding[v])) {
      throw Error(Errc::NotASubgraphMap, "edge {" + std::to_string(u) + "," + std::to_string(v) + "} has no image");
    }
  }
  const auto& dh = h.distances();
  const auto& dg = g.distances();
  for (Vertex u = 0; u < h.order(); ++u) {
    for (Vertex v = u + 1; v < h.order(); ++v) {
      if (dh.at(u, v) != dg.at(embedding[u], embedding[v])) return {false, std::make_pair(u, v)};
    }
  }
  return {};
}

struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> to_parent;  // subgraph vertex i is parent vertex to_parent[i]
};

inline InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> s) {
  if (s.empty()) throw Error(Errc::EmptySet, "induced subgraph of an empty set");
  const VertexSet members = make_vertex_set(std::vector<Vertex>(s.begin(), s.end()));
  std::vector<std::int64_t> index(g.order(), -1);
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (members[i] >= g.order()) throw Error(Errc::OutOfRange, "vertex " + std::to_string(members[i]));
    index[members[i]] = static_cast<std::int64_t>(i);
  }
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges()) {
    if (index[u] >= 0 && index[v] >= 0) edges.emplace_back(static_cast<Vertex>(index[u]), static_cast<Vertex>(index[v]));
  }
  std::vector<std::string> labels;
  if (g.has_labels()) {
    for (const Vertex v : members) labels.push_back(g.label(v));
  }
  return {Graph::build(members.size(), edges, std::move(labels)), members};
}

}  // namespace qec
