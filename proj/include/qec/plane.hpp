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
#include <map>
#include <numeric>
#include <optional>
#include <queue>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qec/error.hpp"
#include "qec/graph.hpp"

namespace qec {

/// A face identified by its index in PlaneGraph::faces() and its sorted
/// boundary vertex set. For triangles the sorted triple is the canonical
/// (x, y, z) naming used throughout the library.
struct FaceRef {
  std::size_t id = 0;
  VertexSet boundary;

  bool is_triangle() const { return boundary.size() == 3; }
  friend bool operator==(const FaceRef&, const FaceRef&) = default;
};

/// A graph together with a rotation system. Faces are always traced from the
/// rotation, never supplied by the caller.
///
/// Tracing rule: the dart following u->v on its face is v->w where w precedes
/// u in the rotation at v.
class PlaneGraph {
 public:
  PlaneGraph() = default;

  const Graph& graph() const { return graph_; }
  std::size_t order() const { return graph_.order(); }
  const std::vector<std::vector<Vertex>>& rotation() const { return rotation_; }
  const std::vector<std::vector<Vertex>>& face_walks() const { return walks_; }
  std::size_t face_count() const { return walks_.size(); }

  FaceRef face(std::size_t id) const { return {id, make_vertex_set(walks_.at(id))}; }

  std::vector<FaceRef> faces() const {
    std::vector<FaceRef> out;
    out.reserve(walks_.size());
    for (std::size_t id = 0; id < walks_.size(); ++id) out.push_back(face(id));
    return out;
  }

  /// Face on which the dart u->v lies.
  std::size_t face_of_dart(Vertex u, Vertex v) const { return face_of_dart_.at(u).at(position(u, v)); }

  /// Index of v in the rotation at u.
  std::size_t position(Vertex u, Vertex v) const {
    const auto& rot = rotation_.at(u);
    auto it = std::find(rot.begin(), rot.end(), v);
    if (it == rot.end()) {
      throw Error(Errc::NoSuchEdge, "no dart " + std::to_string(u) + "->" + std::to_string(v));
    }
    return static_cast<std::size_t>(it - rot.begin());
  }

  /// Face whose boundary is exactly `boundary` (any order), if present.
  std::optional<FaceRef> find_face(std::vector<Vertex> boundary) const {
    const VertexSet key = make_vertex_set(std::move(boundary));
    for (std::size_t id = 0; id < walks_.size(); ++id) {
      if (walks_[id].size() == key.size() && make_vertex_set(walks_[id]) == key) return face(id);
    }
    return std::nullopt;
  }

  bool all_faces_triangles() const {
    return std::all_of(walks_.begin(), walks_.end(), [](const auto& w) { return w.size() == 3; });
  }

  friend PlaneGraph embed_from_rotation(const Graph& g, std::vector<std::vector<Vertex>> rotation);

 private:
  Graph graph_;
  std::vector<std::vector<Vertex>> rotation_;
  std::vector<std::vector<Vertex>> walks_;
  std::vector<std::vector<std::size_t>> face_of_dart_;
};

inline PlaneGraph embed_from_rotation(const Graph& g, std::vector<std::vector<Vertex>> rotation) {
  const std::size_t n = g.order();
  if (rotation.size() != n) throw Error(Errc::BadRotation, "rotation must list every vertex");
  for (Vertex u = 0; u < n; ++u) {
    std::vector<Vertex> sorted = rotation[u];
    std::sort(sorted.begin(), sorted.end());
    if (!std::equal(sorted.begin(), sorted.end(), g.neighbors(u).begin(), g.neighbors(u).end())) {
      throw Error(Errc::BadRotation, "rotation at " + std::to_string(u) + " is not its neighbour set");
    }
  }
  if (g.size() == 0) throw Error(Errc::BadRotation, "an embedding needs at least one edge");
  if (!g.connected()) throw Error(Errc::Disconnected, "only connected graphs are embedded");

  PlaneGraph pg;
  pg.graph_ = g;
  pg.rotation_ = std::move(rotation);
  pg.face_of_dart_.resize(n);
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  for (Vertex u = 0; u < n; ++u) pg.face_of_dart_[u].assign(pg.rotation_[u].size(), kUnset);

  for (Vertex u = 0; u < n; ++u) {
    for (std::size_t i = 0; i < pg.rotation_[u].size(); ++i) {
      if (pg.face_of_dart_[u][i] != kUnset) continue;
      const std::size_t id = pg.walks_.size();
      std::vector<Vertex> walk;
      Vertex a = u;
      std::size_t ai = i;
      while (pg.face_of_dart_[a][ai] == kUnset) {
        pg.face_of_dart_[a][ai] = id;
        walk.push_back(a);
        const Vertex b = pg.rotation_[a][ai];
        const auto& rot_b = pg.rotation_[b];
        const std::size_t back = pg.position(b, a);
        ai = (back + rot_b.size() - 1) % rot_b.size();
        a = b;
      }
      if (a != u || ai != i) throw Error(Errc::BadRotation, "face walk did not close");
      pg.walks_.push_back(std::move(walk));
    }
  }
  const long euler = static_cast<long>(n) - static_cast<long>(g.size()) + static_cast<long>(pg.walks_.size());
  if (euler != 2) {
    throw Error(Errc::NonPlanarGenus, "Euler characteristic " + std::to_string(euler) + " instead of 2");
  }
  return pg;
}

namespace detail {

inline PlaneGraph rotation_from_oriented_triangles(const Graph& g, const std::vector<std::array<Vertex, 3>>& tris) {
  const std::size_t n = g.order();
  std::vector<std::map<Vertex, Vertex>> succ(n);
  auto put = [&](Vertex at, Vertex from, Vertex to) {
    if (!succ[at].emplace(from, to).second) {
      throw Error(Errc::NotMaximalPlanar, "inconsistent link at vertex " + std::to_string(at));
    }
  };
  for (const auto& [a, b, c] : tris) {
    put(a, b, c);
    put(b, c, a);
    put(c, a, b);
  }
  std::vector<std::vector<Vertex>> rotation(n);
  for (Vertex u = 0; u < n; ++u) {
    const auto nbrs = g.neighbors(u);
    if (succ[u].size() != nbrs.size()) {
      throw Error(Errc::NotMaximalPlanar, "link of " + std::to_string(u) + " is not a cycle");
    }
    Vertex cur = nbrs.front();
    for (std::size_t step = 0; step < nbrs.size(); ++step) {
      rotation[u].push_back(cur);
      cur = succ[u].at(cur);
    }
    if (cur != nbrs.front() || make_vertex_set(rotation[u]).size() != nbrs.size()) {
      throw Error(Errc::NotMaximalPlanar, "link of " + std::to_string(u) + " splits into several cycles");
    }
  }
  try {
    return embed_from_rotation(g, std::move(rotation));
  } catch (const Error& e) {
    throw Error(Errc::NotMaximalPlanar, e.what());
  }
}

}  // namespace detail

/// Recovers the unique embedding of a maximal planar graph from its
/// non-separating triangles. Order 3 is accepted as the two-faced triangle.
inline PlaneGraph mpg_faces(const Graph& g) {
  const std::size_t n = g.order();
  if (n == 3 && g.size() == 3) return detail::rotation_from_oriented_triangles(g, {{0, 1, 2}, {0, 2, 1}});
  if (n < 4) throw Error(Errc::NotMaximalPlanar, "order " + std::to_string(n) + " is too small");
  if (g.size() != 3 * n - 6) {
    throw Error(Errc::NotMaximalPlanar, std::to_string(g.size()) + " edges, expected " + std::to_string(3 * n - 6));
  }
  if (!g.connected()) throw Error(Errc::NotMaximalPlanar, "graph is disconnected");

  std::vector<std::array<Vertex, 3>> tris;
  for (auto [u, v] : g.edges()) {
    for (const Vertex w : g.neighbors(v)) {
      if (w <= v || !g.adjacent(u, w)) continue;
      const std::array<Vertex, 3> t{u, v, w};
      if (!is_separating_set(g, t).separates) tris.push_back(t);
    }
  }
  if (tris.size() != 2 * n - 4) {
    throw Error(Errc::NotMaximalPlanar,
                std::to_string(tris.size()) + " non-separating triangles, expected " + std::to_string(2 * n - 4));
  }

  std::map<Edge, std::vector<std::size_t>> by_edge;
  for (std::size_t t = 0; t < tris.size(); ++t) {
    const auto& [a, b, c] = tris[t];
    by_edge[{a, b}].push_back(t);
    by_edge[{a, c}].push_back(t);
    by_edge[{b, c}].push_back(t);
  }
  if (by_edge.size() != g.size()) throw Error(Errc::NotMaximalPlanar, "some edge lies on no face");
  for (const auto& [e, ts] : by_edge) {
    if (ts.size() != 2) {
      throw Error(Errc::NotMaximalPlanar, "edge {" + std::to_string(e.first) + "," + std::to_string(e.second) +
                                              "} lies on " + std::to_string(ts.size()) + " faces");
    }
  }

  // Orient the triangles so that every shared edge is traversed in opposite
  // directions by its two faces.
  std::vector<std::array<Vertex, 3>> oriented(tris.size());
  std::vector<std::uint8_t> done(tris.size(), 0);
  auto runs = [](const std::array<Vertex, 3>& t, Vertex p, Vertex q) {
    return (t[0] == p && t[1] == q) || (t[1] == p && t[2] == q) || (t[2] == p && t[0] == q);
  };
  std::queue<std::size_t> frontier;
  oriented[0] = tris[0];
  done[0] = 1;
  frontier.push(0);
  while (!frontier.empty()) {
    const std::size_t t = frontier.front();
    frontier.pop();
    const auto& ot = oriented[t];
    for (int i = 0; i < 3; ++i) {
      const Vertex p = ot[i];
      const Vertex q = ot[(i + 1) % 3];
      const auto& pair = by_edge.at({std::min(p, q), std::max(p, q)});
      const std::size_t other = pair[0] == t ? pair[1] : pair[0];
      if (done[other]) {
        if (!runs(oriented[other], q, p)) throw Error(Errc::NotMaximalPlanar, "face set is not orientable");
        continue;
      }
      const auto& raw = tris[other];
      oriented[other] = runs(raw, q, p) ? raw : std::array<Vertex, 3>{raw[0], raw[2], raw[1]};
      done[other] = 1;
      frontier.push(other);
    }
  }
  if (std::find(done.begin(), done.end(), 0) != done.end()) {
    throw Error(Errc::NotMaximalPlanar, "face set is not connected");
  }
  PlaneGraph pg = detail::rotation_from_oriented_triangles(g, oriented);
  if (!pg.all_faces_triangles() || pg.face_count() != 2 * n - 4) {
    throw Error(Errc::NotMaximalPlanar, "traced faces are not the triangle set");
  }
  return pg;
}

struct CycleSides {
  VertexSet on_cycle;
  VertexSet side_a;  // side holding the lowest-indexed off-cycle vertex
  VertexSet side_b;
};

namespace detail {

inline std::vector<Edge> validate_cycle(const Graph& g, std::span<const Vertex> cycle) {
  if (cycle.size() < 3) throw Error(Errc::NotACycle, "a cycle needs at least three vertices");
  if (make_vertex_set(std::vector<Vertex>(cycle.begin(), cycle.end())).size() != cycle.size()) {
    throw Error(Errc::NotACycle, "cycle repeats a vertex");
  }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    const Vertex a = cycle[i];
    const Vertex b = cycle[(i + 1) % cycle.size()];
    if (a >= g.order() || b >= g.order() || !g.adjacent(a, b)) {
      throw Error(Errc::NotACycle, "consecutive vertices " + std::to_string(a) + "," + std::to_string(b) +
                                       " are not adjacent");
    }
    edges.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(edges.begin(), edges.end());
  return edges;
}

}  // namespace detail

/// Splits the off-cycle vertices by which side of `cycle` they lie on. Faces
/// are merged across every edge not on the cycle; a simple cycle on the
/// sphere leaves exactly two face classes.
inline CycleSides cycle_sides(const PlaneGraph& pg, std::span<const Vertex> cycle) {
  const Graph& g = pg.graph();
  const std::vector<Edge> cycle_edges = detail::validate_cycle(g, cycle);

  std::vector<std::size_t> parent(pg.face_count());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t f) {
    while (parent[f] != f) f = parent[f] = parent[parent[f]];
    return f;
  };
  for (auto [u, v] : g.edges()) {
    if (std::binary_search(cycle_edges.begin(), cycle_edges.end(), Edge{u, v})) continue;
    const std::size_t a = find(pg.face_of_dart(u, v));
    const std::size_t b = find(pg.face_of_dart(v, u));
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }

  CycleSides out;
  out.on_cycle = make_vertex_set(std::vector<Vertex>(cycle.begin(), cycle.end()));
  std::optional<std::size_t> class_a;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (contains(out.on_cycle, v)) continue;
    const std::size_t cls = find(pg.face_of_dart(v, pg.rotation()[v].front()));
    if (!class_a) class_a = cls;
    (cls == *class_a ? out.side_a : out.side_b).push_back(v);
  }
  return out;
}

inline bool is_jordan_separating(const PlaneGraph& pg, std::span<const Vertex> cycle) {
  const CycleSides sides = cycle_sides(pg, cycle);
  return !sides.side_a.empty() && !sides.side_b.empty();
}

}  // namespace qec
