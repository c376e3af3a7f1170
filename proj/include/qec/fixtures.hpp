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
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qec/criteria.hpp"
#include "qec/enumerate.hpp"
#include "qec/error.hpp"
#include "qec/graph.hpp"
#include "qec/plane.hpp"
#include "qec/qcc.hpp"
#include "qec/synthesis.hpp"

namespace qec {

inline Graph k4() { return build_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}); }

/// Octahedron: every pair adjacent except the antipodes {0,1}, {2,3}, {4,5}.
inline Graph octahedron() {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < 6; ++u) {
    for (Vertex v = u + 1; v < 6; ++v) {
      if (!(u % 2 == 0 && v == u + 1)) edges.emplace_back(u, v);
    }
  }
  return Graph::build(6, edges);
}

/// Icosahedron: apex 0, upper ring 1..5, lower ring 6..10, apex 11.
inline Graph icosahedron() {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < 5; ++i) {
    const Vertex up = 1 + i, up_next = 1 + (i + 1) % 5;
    const Vertex lo = 6 + i, lo_next = 6 + (i + 1) % 5;
    edges.insert(edges.end(), {{0, up}, {up, up_next}, {up, lo}, {up_next, lo}, {lo, lo_next}, {lo, 11}});
  }
  return Graph::build(12, edges);
}

inline Graph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.emplace_back(v - 1, v);
  return Graph::build(n, edges);
}

inline Graph cycle_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, static_cast<Vertex>((v + 1) % n));
  return Graph::build(n, edges);
}

inline Graph complete_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return Graph::build(n, edges);
}

/// Builds a labelled graph from "a-b c-d ..." over the given vertex names.
inline Graph named_graph(const std::vector<std::string>& names, std::string_view edge_list) {
  std::map<std::string, Vertex, std::less<>> index;
  for (std::size_t i = 0; i < names.size(); ++i) index.emplace(names[i], static_cast<Vertex>(i));
  std::vector<Edge> edges;
  std::istringstream in{std::string(edge_list)};
  std::string token;
  while (in >> token) {
    const auto dash = token.find('-');
    if (dash == std::string::npos) throw Error(Errc::ParseError, "edge token '" + token + "'");
    auto a = index.find(token.substr(0, dash));
    auto b = index.find(token.substr(dash + 1));
    if (a == index.end() || b == index.end()) throw Error(Errc::ParseError, "unknown vertex in '" + token + "'");
    edges.emplace_back(a->second, b->second);
  }
  return Graph::build(names.size(), edges, names);
}

struct Fixture;

struct FixtureFact {
  std::string statement;
  std::function<bool(const Fixture&)> check;
};

struct Fixture {
  std::string name;
  std::string description;
  Graph graph;
  std::optional<PlaneGraph> plane;
  std::map<std::string, VertexSet> sets;
  std::vector<FixtureFact> facts;

  Vertex vertex(std::string_view label) const {
    for (Vertex v = 0; v < graph.order(); ++v) {
      if (graph.label(v) == label) return v;
    }
    throw Error(Errc::OutOfRange, "fixture " + name + " has no vertex " + std::string(label));
  }
  VertexSet vertices(std::initializer_list<std::string_view> labels) const {
    std::vector<Vertex> out;
    for (auto l : labels) out.push_back(vertex(l));
    return make_vertex_set(std::move(out));
  }
  const VertexSet& set(const std::string& key) const { return sets.at(key); }
  FaceRef face(const VertexSet& boundary) const {
    auto f = plane.value().find_face(boundary);
    if (!f) throw Error(Errc::FaceMismatch, "fixture " + name + ": boundary is not a face");
    return *f;
  }
};

namespace detail {

inline Fixture make_fixture(std::string name, std::string description, Graph g, bool maximal) {
  Fixture f{std::move(name), std::move(description), std::move(g), std::nullopt, {}, {}};
  if (maximal) f.plane = mpg_faces(f.graph);
  return f;
}

inline Fixture p5_fixture() {
  Fixture f = make_fixture("p5-qcc", "path v1..v5 with target set {v2, v3}",
                           named_graph({"v1", "v2", "v3", "v4", "v5"}, "v1-v2 v2-v3 v3-v4 v4-v5"), false);
  f.sets["S"] = f.vertices({"v2", "v3"});
  f.facts = {
      {"qcc(S) = {v1, v5}", [](const Fixture& x) { return qcc_set(x.graph, x.set("S")).qcc == x.vertices({"v1", "v5"}); }},
      {"ecc(S) = {v5}", [](const Fixture& x) { return qcc_set(x.graph, x.set("S")).ecc == x.vertices({"v5"}); }},
      {"e(S) = 2 and q(S) = 1", [](const Fixture& x) {
         const auto r = qcc_set(x.graph, x.set("S"));
         return r.e == 2 && r.q == 1;
       }},
  };
  return f;
}

inline Fixture g_star_fixture() {
  Fixture f = make_fixture(
      "g-star", "10-vertex maximal plane graph with face f*: x, y, z",
      named_graph({"x", "y", "z", "a", "b", "c", "d", "e", "f", "g"},
                  "x-y y-z z-x a-c c-d d-a x-a a-y x-c c-e e-x y-d d-g g-y c-b b-d z-e e-b b-g g-z z-f f-b e-f f-g"),
      true);
  f.sets["face"] = f.vertices({"x", "y", "z"});
  auto cls = [](const Fixture& x, std::string_view v) {
    const auto cfg = face_configuration(*x.plane, x.face(x.set("face")));
    return class_name(cfg.membership.at(x.vertex(v)));
  };
  f.facts = {
      {"x, y, z have eccentricity 2", [](const Fixture& x) {
         const auto p = eccentricity_profile(x.graph);
         return std::all_of(x.set("face").begin(), x.set("face").end(), [&](Vertex v) { return p.eccentricity[v] == 2; });
       }},
      {"qcc(f*) = V - {x, y, z}", [](const Fixture& x) {
         return qcc_set(x.graph, x.set("face")).qcc == x.vertices({"a", "b", "c", "d", "e", "f", "g"});
       }},
      {"q(f*) = 1", [](const Fixture& x) { return qcc_set(x.graph, x.set("face")).q == 1; }},
      {"a in (1)_xy^z", [cls](const Fixture& x) { return cls(x, "a") == "(k)_xy^z"; }},
      {"b in (2)_xyz", [cls](const Fixture& x) { return cls(x, "b") == "(k+1)_xyz"; }},
      {"c in (1)_x^yz", [cls](const Fixture& x) { return cls(x, "c") == "(k)_x^yz"; }},
      {"d in (1)_y^xz", [cls](const Fixture& x) { return cls(x, "d") == "(k)_y^xz"; }},
  };
  return f;
}

inline Fixture disc_center_fixture() {
  Fixture f = make_fixture(
      "disc-center", "12-vertex maximal planar graph whose center is two disjoint triangles",
      named_graph({"a1", "a2", "a3", "a4", "a5", "c1", "c2", "c3", "d1", "d2", "d3", "u"},
                  "a1-a2 a2-a3 a3-a4 a4-a5 a2-c1 c1-a4 a4-d1 d1-a2 c1-a3 a3-d1 c1-c2 c2-c3 c3-c1 d1-d2 d2-d3 "
                  "d3-d1 a2-d2 d2-a1 a1-c2 c2-a2 a4-d3 d3-a5 a5-c3 c3-a4 u-a1 u-c2 u-d2 u-c3 u-d3 u-a5"),
      true);
  f.sets["center"] = f.vertices({"c1", "c2", "c3", "d1", "d2", "d3"});
  f.facts = {
      {"center = {c1, c2, c3, d1, d2, d3}",
       [](const Fixture& x) { return eccentricity_profile(x.graph).center == x.set("center"); }},
      {"center induces 2K3", [](const Fixture& x) {
         const auto sub = induced_subgraph(x.graph, x.set("center"));
         const auto split = is_separating_set(sub.graph, {});
         return sub.graph.size() == 6 && split.components.size() == 2 && split.components[0].size() == 3;
       }},
      {"cycle condition holds", [](const Fixture& x) { return cycle_condition(*x.plane).pass; }},
  };
  return f;
}

inline Fixture cycle_not_qef_fixture() {
  Fixture f = make_fixture(
      "cycle-not-qef", "22-vertex maximal planar graph meeting the cycle condition but not the face criterion",
      named_graph({"B", "O", "p11", "p1m1", "pm1m1", "pm11", "p22", "p2m2", "pm2m2", "p33", "p3m3", "pm3m3", "pm33",
                   "R", "i1", "i2", "i1'", "i2'", "o1", "o2", "o1'", "o2'"},
                  "p11-p1m1 p1m1-pm1m1 pm1m1-pm11 pm11-p11 p22-p2m2 p2m2-pm2m2 pm2m2-B B-p22 "
                  "p33-p3m3 p3m3-pm3m3 pm3m3-pm33 pm33-p33 pm3m3-pm2m2 pm2m2-pm1m1 pm1m1-O O-p11 p11-p22 "
                  "p22-p33 pm33-B B-pm11 pm11-O O-p1m1 p1m1-p2m2 p2m2-p3m3 p33-R R-p3m3 pm33-R pm3m3-R "
                  "p22-pm11 pm11-pm2m2 pm2m2-p1m1 p1m1-p22 p22-pm33 pm33-pm2m2 pm2m2-p3m3 p3m3-p22 "
                  "B-i1 i1-pm11 B-i1' i1'-pm11 i1-i1' i1'-pm2m2 B-i2 i2-pm11 B-i2' i2'-pm11 i2-i2' i2'-p22 "
                  "B-o1 o1-pm33 B-o1' o1'-pm33 o1-o1' o1'-pm2m2 B-o2 o2-pm33 B-o2' o2'-pm33 o2-o2' o2'-p22"),
      true);
  f.sets["black"] = f.vertices({"B"});
  f.facts = {
      {"diameter 4", [](const Fixture& x) { return eccentricity_profile(x.graph).diameter == 4; }},
      {"face criterion fails at the black vertex", [](const Fixture& x) {
         const auto v = qef_criterion(*x.plane, 4);
         return !v.pass && v.failing_vertex == x.vertex("B");
       }},
      {"cycle condition holds", [](const Fixture& x) { return cycle_condition(*x.plane).pass; }},
  };
  return f;
}

inline Fixture g9_fixture() {
  Fixture f = make_fixture("g9", "9-vertex maximal planar graph outside every planar center",
                           named_graph({"u", "w0", "x", "w2", "w", "w4", "y", "w6", "v"},
                                       "w0-x x-w2 w2-w w-w4 w4-y y-w6 w6-v v-w0 u-w0 u-x u-w2 u-w u-w4 u-y u-w6 "
                                       "u-v w0-w6 w6-x x-y y-w2 w2-w4"),
                           true);
  f.facts = {
      {"diameter 2", [](const Fixture& x) { return eccentricity_profile(x.graph).diameter == 2; }},
      {"e(u) = 1", [](const Fixture& x) { return eccentricity_profile(x.graph).eccentricity[x.vertex("u")] == 1; }},
      {"face criterion fails exactly at u", [](const Fixture& x) {
         const auto v = qef_criterion(*x.plane, 2);
         return !v.pass && v.failing_vertices == VertexSet{x.vertex("u")};
       }},
      {"every face has v or w strictly farther than u from each boundary vertex", [](const Fixture& x) {
         const auto& d = x.graph.distances();
         const Vertex u = x.vertex("u");
         auto farther = [&](Vertex far, const FaceRef& face) {
           return std::all_of(face.boundary.begin(), face.boundary.end(),
                              [&](Vertex t) { return d.hops(far, t) > d.hops(u, t); });
         };
         for (const FaceRef& face : x.plane->faces()) {
           if (!farther(x.vertex("v"), face) && !farther(x.vertex("w"), face)) return false;
         }
         return true;
       }},
  };
  return f;
}

inline Fixture k3_k2bar_host_fixture() {
  Fixture f = make_fixture("k3-k2bar-host", "self-centered maximal planar graph containing K3 + complement of K2",
                           named_graph({"1", "2", "3", "4", "5", "a", "b", "c"},
                                       "2-3 3-4 4-2 1-2 1-3 1-4 5-2 5-3 5-4 a-1 a-2 a-3 b-1 b-3 b-4 c-1 c-2 c-4"),
                           true);
  f.facts = {
      {"self-centered with radius 2", [](const Fixture& x) {
         const auto p = eccentricity_profile(x.graph);
         return p.radius == 2 && p.diameter == 2;
       }},
      {"some face dominates", [](const Fixture& x) { return has_dominating_face(*x.plane).has_value(); }},
  };
  return f;
}

inline Fixture k3_k2bar_fixture() {
  Fixture f = make_fixture("k3-k2bar", "K3 + complement of K2",
                           named_graph({"1", "2", "3", "4", "5"}, "2-3 3-4 4-2 1-2 1-3 1-4 5-2 5-3 5-4"), true);
  f.facts = {
      {"the 8-vertex host is a self-centered maximal planar graph of diameter 2", [](const Fixture&) {
         const Fixture host = k3_k2bar_host_fixture();
         const auto p = eccentricity_profile(host.graph);
         return p.radius == 2 && p.diameter == 2 && host.plane.has_value();
       }},
      {"H sits isometrically in the host", [](const Fixture& x) {
         const Fixture host = k3_k2bar_host_fixture();
         return is_isometric_subgraph(x.graph, host.graph, x.vertices({"1", "2", "3", "4", "5"})).isometric;
       }},
  };
  return f;
}

inline constexpr std::string_view kPrismEdges =
    "u-x1 u-x2 u-x3 v-y1 v-y2 v-y3 x1-x2 x2-x3 x3-x1 y1-y2 y2-y3 y3-y1 x1-y1 x2-y2 x3-y3 ";

inline constexpr std::string_view kH1Extra = "x1-y2 x2-y3 x3-y1";
inline constexpr std::string_view kH2Extra = "x1-y2 x3-y2 x3-y1";

inline Graph h_graph(std::string_view extra) {
  return named_graph({"u", "x1", "x2", "x3", "v", "y1", "y2", "y3"}, std::string(kPrismEdges) + std::string(extra));
}

inline Fixture h_fixture(std::string name, std::string_view extra) {
  Fixture f = make_fixture(name, "order-8 maximal planar graph of radius 2 and diameter 3", h_graph(extra), true);
  f.facts = {
      {"radius 2, diameter 3", [](const Fixture& x) {
         const auto p = eccentricity_profile(x.graph);
         return p.radius == 2 && p.diameter == 3;
       }},
      {"face criterion holds at alpha = 3", [](const Fixture& x) { return qef_criterion(*x.plane, 3).pass; }},
      {"h1 and h2 are not isomorphic", [](const Fixture&) {
         return canonical_code(mpg_faces(h_graph(kH1Extra))) != canonical_code(mpg_faces(h_graph(kH2Extra)));
       }},
  };
  return f;
}

inline Fixture h1_fixture() {
  Fixture f = h_fixture("h1", kH1Extra);
  f.sets["face"] = f.vertices({"u", "x2", "x3"});
  f.facts.push_back({"y1 is quasi-eccentric to face {u, x2, x3}", [](const Fixture& x) {
                       return contains(qcc_set(x.graph, x.set("face")).qcc, x.vertex("y1"));
                     }});
  return f;
}

inline Fixture h2_fixture() { return h_fixture("h2", kH2Extra); }

inline Fixture hedetniemi_star_fixture() {
  Fixture f = make_fixture("hedetniemi-star", "star with centre 2 and leaves 1, 3, 4",
                           named_graph({"1", "2", "3", "4"}, "2-1 2-3 2-4"), false);
  f.facts = {
      {"center of the four-vertex augmentation is the star", [](const Fixture& x) {
         const auto host = hedetniemi(x.graph);
         return eccentricity_profile(host.graph).center == make_vertex_set(host.embedding);
       }},
  };
  return f;
}

inline PlaneGraph sepcycles_plane(const Graph& g) {
  return embed_from_rotation(g, {{5, 4}, {5, 4}, {5, 4}, {5, 4}, {0, 1, 5, 2, 3}, {3, 2, 4, 1, 0}});
}

inline Fixture sepcycles_fixture() {
  Fixture f = make_fixture("sepcycles", "6-vertex plane graph with a separating 4-cycle and a separating triangle",
                           named_graph({"1", "2", "3", "4", "5", "6"}, "5-3 3-6 6-2 2-5 5-4 4-6 6-1 1-5 5-6"), false);
  f.plane = sepcycles_plane(f.graph);
  f.sets["left"] = f.vertices({"5", "3", "6", "2"});
  f.sets["right"] = f.vertices({"5", "1", "6"});
  auto cyc = [](const Fixture& x, std::initializer_list<std::string_view> labels) {
    std::vector<Vertex> out;
    for (auto l : labels) out.push_back(x.vertex(l));
    return out;
  };
  f.facts = {
      {"cycle 5-3-6-2 separates but is not Jordan separating", [cyc](const Fixture& x) {
         return is_separating_set(x.graph, x.set("left")).separates &&
                !is_jordan_separating(*x.plane, cyc(x, {"5", "3", "6", "2"}));
       }},
      {"cycle 5-1-6 is Jordan separating",
       [cyc](const Fixture& x) { return is_jordan_separating(*x.plane, cyc(x, {"5", "1", "6"})); }},
  };
  return f;
}

inline Fixture hexagon_3chord_fixture() {
  Fixture f = make_fixture("hexagon-3chord", "6-cycle u0..u5 with the chord u0u3",
                           named_graph({"u0", "u1", "u2", "u3", "u4", "u5"}, "u0-u1 u1-u2 u2-u3 u3-u4 u4-u5 u5-u0 u0-u3"),
                           false);
  f.facts = {
      {"{u0, u3} dominates the cycle", [](const Fixture& x) {
         return dominates(x.graph, x.vertices({"u0", "u3"}), x.vertices({"u0", "u1", "u2", "u3", "u4", "u5"}));
       }},
  };
  return f;
}

inline Fixture hexagon_2chords_fixture() {
  Fixture f = make_fixture("hexagon-2chords", "6-cycle u0..u5 with chords u0u2, u2u4, u4u0",
                           named_graph({"u0", "u1", "u2", "u3", "u4", "u5"},
                                       "u0-u1 u1-u2 u2-u3 u3-u4 u4-u5 u5-u0 u0-u2 u2-u4 u4-u0"),
                           false);
  f.facts = {
      {"{u0, u2, u4} dominates the cycle", [](const Fixture& x) {
         return dominates(x.graph, x.vertices({"u0", "u2", "u4"}), x.vertices({"u0", "u1", "u2", "u3", "u4", "u5"}));
       }},
  };
  return f;
}

inline Fixture solid_fixture(std::string name, Graph g, Hops radius) {
  Fixture f = make_fixture(name, "regular triangulated solid", std::move(g), true);
  f.facts = {
      {"self-centered with radius " + std::to_string(radius), [radius](const Fixture& x) {
         const auto p = eccentricity_profile(x.graph);
         return p.radius == radius && p.diameter == radius;
       }},
  };
  return f;
}

using FixtureFactory = Fixture (*)();

inline const std::vector<std::pair<std::string_view, FixtureFactory>>& fixture_table() {
  static const std::vector<std::pair<std::string_view, FixtureFactory>> table{
      {"cycle-not-qef", cycle_not_qef_fixture},
      {"disc-center", disc_center_fixture},
      {"g-star", g_star_fixture},
      {"g9", g9_fixture},
      {"h1", h1_fixture},
      {"h2", h2_fixture},
      {"hedetniemi-star", hedetniemi_star_fixture},
      {"hexagon-2chords", hexagon_2chords_fixture},
      {"hexagon-3chord", hexagon_3chord_fixture},
      {"icosahedron", [] { return solid_fixture("icosahedron", icosahedron(), 3); }},
      {"k3-k2bar", k3_k2bar_fixture},
      {"k3-k2bar-host", k3_k2bar_host_fixture},
      {"k4", [] { return solid_fixture("k4", k4(), 1); }},
      {"octahedron", [] { return solid_fixture("octahedron", octahedron(), 2); }},
      {"p5-qcc", p5_fixture},
      {"sepcycles", sepcycles_fixture},
  };
  return table;
}

}  // namespace detail

inline std::vector<std::string> fixture_names() {
  std::vector<std::string> out;
  for (const auto& [name, make] : detail::fixture_table()) out.emplace_back(name);
  return out;
}

/// Builds a fixture without checking its facts.
inline Fixture make_fixture(std::string_view name) {
  for (const auto& [key, make] : detail::fixture_table()) {
    if (key == name) return make();
  }
  throw Error(Errc::UnknownFixture, "no fixture named '" + std::string(name) + "'");
}

struct FactResult {
  std::string statement;
  bool holds = false;
};

inline std::vector<FactResult> verify_fixture(const Fixture& f) {
  std::vector<FactResult> out;
  for (const auto& fact : f.facts) out.push_back({fact.statement, fact.check(f)});
  return out;
}

/// Builds a fixture and re-verifies every attached fact.
inline Fixture load_fixture(std::string_view name) {
  Fixture f = make_fixture(name);
  for (const auto& r : verify_fixture(f)) {
    if (!r.holds) throw Error(Errc::FixtureFactFailed, f.name + ": " + r.statement);
  }
  return f;
}

}  // namespace qec
