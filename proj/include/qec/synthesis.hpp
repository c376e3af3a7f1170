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
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "qec/criteria.hpp"
#include "qec/error.hpp"
#include "qec/gadget.hpp"
#include "qec/graph.hpp"
#include "qec/plane.hpp"
#include "qec/qcc.hpp"

namespace qec {

/// One face's contribution G_f: either H itself (exempt) or H with a gadget
/// glued into the face.
struct FaceSynthesis {
  FaceRef face;
  FaceConfiguration configuration;
  CaseLabel label;
  std::uint32_t delta = 0;
  bool exempt = false;
  std::optional<GadgetSpec> gadget;
  PlaneGraph gf;
  std::vector<Vertex> gadget_map;  // gadget vertex -> G_f vertex, empty when exempt
};

namespace detail {

// Decorations of the normal-form gadget for each case, in role letters.
struct RoleDecoration {
  std::uint8_t subscripts;
  std::vector<std::pair<int, int>> superscripts;
};

inline RoleDecoration role_decoration(CaseKind kind) {
  constexpr int X = 0, Y = 1, Z = 2;
  switch (kind) {
    case CaseKind::Case1: return {0, {}};
    case CaseKind::Case3: return {4, {}};
    case CaseKind::Case4_1: return {6, {}};
    case CaseKind::Case4_2: return {6, {{Y, Z}}};
    case CaseKind::Case5_1: return {7, {}};
    case CaseKind::Case5_2: return {7, {{Y, Z}}};
    case CaseKind::Case5_3: return {7, {{Y, Z}, {Z, X}}};
    case CaseKind::Case6: return {7, {{X, Y}, {Y, Z}, {Z, X}}};
  }
  throw Error(Errc::CaseDispatchFailure, "unknown case");
}

inline void require_alpha(const EccentricityProfile& prof, Hops alpha) {
  if (alpha < prof.diameter) {
    throw Error(Errc::AlphaTooSmall,
                "alpha " + std::to_string(alpha) + " below diameter " + std::to_string(prof.diameter));
  }
}

}  // namespace detail

/// Gadget spec that the case analysis assigns to a face, in face positions.
inline GadgetSpec gadget_for_case(const CaseLabel& label, std::uint32_t delta) {
  const auto deco = detail::role_decoration(label.kind);
  GadgetSpec spec{delta, label.to_positions(deco.subscripts), 0};
  for (auto [p, q] : deco.superscripts) spec.superscripts |= pair_bit(label.relabel[p], label.relabel[q]);
  return spec;
}

/// Builds G_f for one face and certifies by BFS that every vertex
/// quasi-eccentric to the face reaches eccentricity exactly alpha while no
/// host vertex exceeds it.
inline FaceSynthesis build_gf(const PlaneGraph& h, const FaceRef& face, Hops alpha) {
  const EccentricityProfile prof = eccentricity_profile(h.graph());
  detail::require_alpha(prof, alpha);

  FaceSynthesis out;
  out.face = face;
  out.configuration = face_configuration(h, face);
  out.label = classify_case(out.configuration);
  const Hops k = out.configuration.k;
  const Hops reach = out.label.kind == CaseKind::Case1 ? k : k + 1;
  if (reach > alpha) throw Error(Errc::CaseDispatchFailure, "configuration deeper than alpha");
  out.delta = alpha - reach;

  const bool saturated = std::all_of(out.configuration.qcc.begin(), out.configuration.qcc.end(),
                                     [&](Vertex u) { return prof.eccentricity[u] == alpha; });
  out.exempt = out.delta == 0 || saturated;
  if (out.exempt) {
    out.gf = h;
  } else {
    out.gadget = gadget_for_case(out.label, out.delta);
    Glued glued = glue(h, face, build_gamma(*out.gadget));
    out.gf = std::move(glued.plane);
    out.gadget_map = std::move(glued.gadget_map);
  }

  const auto& dist = out.gf.graph().distances();
  auto ecc = [&](Vertex u) {
    Hops e = 0;
    for (Vertex v = 0; v < out.gf.order(); ++v) e = std::max(e, dist.hops(u, v));
    return e;
  };
  for (Vertex u = 0; u < h.order(); ++u) {
    const Hops e = ecc(u);
    const bool quasi = contains(out.configuration.qcc, u);
    if (e > alpha || (quasi && e != alpha)) {
      throw Error(Errc::CaseDispatchFailure, std::string(to_string(out.label.kind)) + " on face " +
                                                 std::to_string(face.id) + ": vertex " + std::to_string(u) +
                                                 " has eccentricity " + std::to_string(e) + " in G_f");
    }
  }
  return out;
}

/// A member of a glued family: its graph and the id of each of its vertices
/// in the union.
struct GluingPart {
  Graph graph;
  std::vector<Vertex> global;
};

struct SynthesisReport {
  PlaneGraph h;
  Hops alpha = 0;
  std::vector<FaceSynthesis> faces;
  Graph host;
  std::optional<PlaneGraph> host_plane;
  std::vector<Vertex> embedding;       // H vertex -> host vertex
  std::vector<GluingPart> parts;       // the G_f family on the shared vertex arena
  std::vector<std::optional<std::size_t>> gadget_face;  // host vertex -> face id of its gadget
  std::vector<Hops> eccentricity;      // recomputed on the host
  Hops radius = 0;
  Hops diameter = 0;
  bool equi_eccentric = false;
  bool center_subset = false;
  bool exact_center = false;
  std::size_t removed_vertices = 0;  // vertices dropped when forming PG
};

namespace detail {

inline void certify(SynthesisReport& rep) {
  const EccentricityProfile prof = eccentricity_profile(rep.host);
  rep.eccentricity = prof.eccentricity;
  rep.radius = prof.radius;
  rep.diameter = prof.diameter;
  rep.equi_eccentric = std::all_of(rep.embedding.begin(), rep.embedding.end(),
                                   [&](Vertex v) { return prof.eccentricity[v] == rep.alpha; });
  rep.center_subset = std::all_of(rep.embedding.begin(), rep.embedding.end(),
                                  [&](Vertex v) { return contains(prof.center, v); });
  rep.exact_center = make_vertex_set(rep.embedding) == prof.center;
}

}  // namespace detail

/// Glues each face's G_f into one maximal plane host on a shared vertex
/// arena: H keeps indices 0..n-1 and each gadget gets a fresh block.
inline SynthesisReport build_supergraph(const PlaneGraph& h, Hops alpha) {
  const CriterionVerdict verdict = qef_criterion(h, alpha);
  if (!verdict.pass) {
    throw Error(Errc::CriterionFails, "vertex " + h.graph().label(*verdict.failing_vertex) +
                                          " is quasi-eccentric to no face");
  }
  const Graph& hg = h.graph();
  const std::size_t n = hg.order();
  SynthesisReport rep;
  rep.h = h;
  rep.alpha = alpha;
  rep.embedding.resize(n);
  for (Vertex v = 0; v < n; ++v) rep.embedding[v] = v;
  rep.gadget_face.assign(n, std::nullopt);

  std::vector<Edge> edges(hg.edges());
  std::vector<std::string> labels = hg.labels();
  Vertex next = static_cast<Vertex>(n);
  for (const FaceRef& face : h.faces()) {
    FaceSynthesis fs = build_gf(h, face, alpha);
    GluingPart part{fs.gf.graph(), std::vector<Vertex>(fs.gf.order())};
    for (Vertex v = 0; v < fs.gf.order(); ++v) part.global[v] = v < n ? v : static_cast<Vertex>(next + (v - n));
    for (auto [a, b] : fs.gf.graph().edges()) {
      if (a >= n || b >= n) edges.emplace_back(part.global[a], part.global[b]);
    }
    for (Vertex v = static_cast<Vertex>(n); v < fs.gf.order(); ++v) {
      rep.gadget_face.push_back(face.id);
      if (hg.has_labels()) labels.push_back(fs.gf.graph().label(v));
    }
    next += static_cast<Vertex>(fs.gf.order() - n);
    rep.parts.push_back(std::move(part));
    rep.faces.push_back(std::move(fs));
  }
  rep.host = Graph::build(next, edges, std::move(labels));
  rep.host_plane = mpg_faces(rep.host);
  detail::certify(rep);
  return rep;
}

/// Drops every host vertex outside H with exactly two neighbours in H, which
/// pushes all of H's former neighbours in the gadgets out of the center.
inline SynthesisReport build_center_host(const PlaneGraph& h, Hops alpha) {
  const EccentricityProfile prof = eccentricity_profile(h.graph());
  if (alpha < prof.diameter + 3) {
    throw Error(Errc::AlphaTooSmall, "alpha " + std::to_string(alpha) + " below diameter + 3 = " +
                                         std::to_string(prof.diameter + 3));
  }
  SynthesisReport rep = build_supergraph(h, alpha);
  const Graph g = rep.host;
  const std::size_t n = h.order();

  std::vector<Vertex> keep;
  std::vector<Vertex> removed;
  for (Vertex v = 0; v < g.order(); ++v) {
    const auto nbrs = g.neighbors(v);
    const auto in_h = std::count_if(nbrs.begin(), nbrs.end(), [&](Vertex w) { return w < n; });
    (v >= n && in_h == 2 ? removed : keep).push_back(v);
  }
  for (const Vertex v : removed) {
    if (g.degree(v) != 4) {
      throw Error(Errc::InternalInvariantViolation, "removed vertex " + std::to_string(v) + " has degree " +
                                                        std::to_string(g.degree(v)));
    }
    for (const Vertex w : removed) {
      if (g.adjacent(v, w)) throw Error(Errc::InternalInvariantViolation, "two removed vertices are adjacent");
    }
  }
  InducedSubgraph pg = induced_subgraph(g, keep);
  if (!is_isometric_subgraph(pg.graph, g, pg.to_parent).isometric) {
    throw Error(Errc::InternalInvariantViolation, "PG is not isometric in G");
  }

  std::vector<std::int64_t> index(g.order(), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) index[keep[i]] = static_cast<std::int64_t>(i);
  std::vector<std::vector<Vertex>> rotation(keep.size());
  for (std::size_t i = 0; i < keep.size(); ++i) {
    for (const Vertex w : rep.host_plane->rotation()[keep[i]]) {
      if (index[w] >= 0) rotation[i].push_back(static_cast<Vertex>(index[w]));
    }
  }
  std::vector<std::optional<std::size_t>> gadget_face;
  for (const Vertex v : keep) gadget_face.push_back(rep.gadget_face[v]);

  rep.host_plane = embed_from_rotation(pg.graph, std::move(rotation));
  rep.host = pg.graph;
  rep.gadget_face = std::move(gadget_face);
  rep.removed_vertices = removed.size();
  detail::certify(rep);
  if (!rep.exact_center) {
    throw Error(Errc::CaseDispatchFailure, "center of PG differs from H at alpha " + std::to_string(alpha));
  }
  return rep;
}

/// For every H vertex u, some vertex at distance e(u) lies outside the
/// gadgets of all faces containing u. Returns the first vertex without one.
inline std::optional<Vertex> far_face_violation(const SynthesisReport& rep) {
  const auto& dist = rep.host.distances();
  for (Vertex u = 0; u < rep.embedding.size(); ++u) {
    const Vertex hu = rep.embedding[u];
    bool found = false;
    for (Vertex w = 0; w < rep.host.order() && !found; ++w) {
      if (dist.hops(hu, w) != rep.eccentricity[hu]) continue;
      const auto& f = rep.gadget_face[w];
      found = !f || !contains(rep.h.face(*f).boundary, u);
    }
    if (!found) return u;
  }
  return std::nullopt;
}

struct HedetniemiHost {
  Graph graph;
  std::vector<Vertex> embedding;
};

/// Adds a, b adjacent to all of g, a pendant c on a and a pendant d on b.
inline HedetniemiHost hedetniemi(const Graph& g) {
  const Vertex n = static_cast<Vertex>(g.order());
  const Vertex a = n, b = n + 1, c = n + 2, d = n + 3;
  std::vector<Edge> edges(g.edges());
  for (Vertex v = 0; v < n; ++v) {
    edges.emplace_back(v, a);
    edges.emplace_back(v, b);
  }
  edges.emplace_back(a, c);
  edges.emplace_back(b, d);
  std::vector<std::string> labels;
  if (g.has_labels()) {
    labels = g.labels();
    for (const char* name : {"a", "b", "c", "d"}) labels.emplace_back(name);
  }
  HedetniemiHost out{Graph::build(n + 4, edges, std::move(labels)), std::vector<Vertex>(n)};
  for (Vertex v = 0; v < n; ++v) out.embedding[v] = v;
  return out;
}

struct GluingCheck {
  bool parts_isometric = false;
  bool eccentricity_identity = false;
  VertexSet shared;  // the common intersection S, in union ids
  bool holds() const { return parts_isometric && eccentricity_identity; }
};

/// Checks, on the explicit union, that every part is isometric and that each
/// shared vertex's eccentricity is the maximum of its eccentricities in the
/// parts.
inline GluingCheck verify_gluing_theorem(const std::vector<GluingPart>& parts) {
  if (parts.empty()) throw Error(Errc::HypothesisViolated, "empty family");
  std::vector<VertexSet> sets;
  for (const auto& p : parts) {
    if (p.global.size() != p.graph.order()) throw Error(Errc::HypothesisViolated, "part id map has wrong length");
    if (!p.graph.connected()) throw Error(Errc::HypothesisViolated, "a part is disconnected");
    VertexSet s = make_vertex_set(p.global);
    if (s.size() != p.global.size()) throw Error(Errc::HypothesisViolated, "part id map is not injective");
    sets.push_back(std::move(s));
  }
  GluingCheck out;
  if (parts.size() == 1) {
    out.shared = sets.front();
  } else {
    std::set_intersection(sets[0].begin(), sets[0].end(), sets[1].begin(), sets[1].end(),
                          std::back_inserter(out.shared));
    for (std::size_t i = 0; i < sets.size(); ++i) {
      for (std::size_t j = i + 1; j < sets.size(); ++j) {
        VertexSet meet;
        std::set_intersection(sets[i].begin(), sets[i].end(), sets[j].begin(), sets[j].end(), std::back_inserter(meet));
        if (meet != out.shared) throw Error(Errc::HypothesisViolated, "pairwise intersections differ");
      }
    }
  }
  if (out.shared.empty()) throw Error(Errc::HypothesisViolated, "parts share no vertex");

  // Union on compressed ids.
  VertexSet all;
  for (const auto& s : sets) all.insert(all.end(), s.begin(), s.end());
  all = make_vertex_set(std::move(all));
  auto id = [&](Vertex global) {
    return static_cast<Vertex>(std::lower_bound(all.begin(), all.end(), global) - all.begin());
  };
  std::set<Edge> edge_set;
  for (const auto& p : parts) {
    for (auto [a, b] : p.graph.edges()) {
      const Vertex u = id(p.global[a]);
      const Vertex v = id(p.global[b]);
      edge_set.emplace(std::min(u, v), std::max(u, v));
    }
  }
  const std::vector<Edge> union_edges(edge_set.begin(), edge_set.end());
  const Graph g = Graph::build(all.size(), union_edges);

  // The common subgraph: edges on S present in every part.
  std::vector<Vertex> shared_ids;
  for (const Vertex s : out.shared) shared_ids.push_back(id(s));
  std::vector<std::map<Vertex, Vertex>> local(parts.size());
  for (std::size_t m = 0; m < parts.size(); ++m) {
    for (Vertex v = 0; v < parts[m].global.size(); ++v) local[m][parts[m].global[v]] = v;
  }
  std::vector<Edge> common;
  for (std::size_t i = 0; i < out.shared.size(); ++i) {
    for (std::size_t j = i + 1; j < out.shared.size(); ++j) {
      bool everywhere = true;
      for (std::size_t m = 0; m < parts.size() && everywhere; ++m) {
        everywhere = parts[m].graph.adjacent(local[m].at(out.shared[i]), local[m].at(out.shared[j]));
      }
      if (everywhere) common.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
    }
  }
  const Graph s_graph = Graph::build(out.shared.size(), common);
  if (!s_graph.connected()) throw Error(Errc::HypothesisViolated, "the common subgraph is disconnected");
  for (std::size_t m = 0; m < parts.size(); ++m) {
    std::vector<Vertex> into_part;
    for (const Vertex s : out.shared) into_part.push_back(local[m].at(s));
    if (!is_isometric_subgraph(s_graph, parts[m].graph, into_part).isometric) {
      throw Error(Errc::HypothesisViolated, "the common subgraph is not isometric in part " + std::to_string(m));
    }
  }

  out.parts_isometric = std::all_of(parts.begin(), parts.end(), [&](const GluingPart& p) {
    std::vector<Vertex> into_union;
    for (const Vertex v : p.global) into_union.push_back(id(v));
    return is_isometric_subgraph(p.graph, g, into_union).isometric;
  });

  const EccentricityProfile whole = eccentricity_profile(g);
  std::vector<EccentricityProfile> per_part;
  for (const auto& p : parts) per_part.push_back(eccentricity_profile(p.graph));
  out.eccentricity_identity = std::all_of(out.shared.begin(), out.shared.end(), [&](Vertex s) {
    Hops best = 0;
    for (std::size_t m = 0; m < parts.size(); ++m) best = std::max(best, per_part[m].eccentricity[local[m].at(s)]);
    return whole.eccentricity[id(s)] == best;
  });
  return out;
}

/// If H has no dominating face and is equi-eccentric in the host, it sits in
/// the host's center.
inline bool verify_equi_in_center(const PlaneGraph& h, const Graph& host, std::span<const Vertex> embedding) {
  if (auto f = has_dominating_face(h)) {
    throw Error(Errc::PreconditionFailed, "face " + std::to_string(f->id) + " dominates H");
  }
  if (embedding.size() != h.order()) throw Error(Errc::PreconditionFailed, "embedding must cover H");
  const EccentricityProfile prof = eccentricity_profile(host);
  const Hops e = prof.eccentricity.at(embedding.front());
  for (const Vertex v : embedding) {
    if (prof.eccentricity.at(v) != e) throw Error(Errc::PreconditionFailed, "H is not equi-eccentric in the host");
  }
  return std::all_of(embedding.begin(), embedding.end(), [&](Vertex v) { return contains(prof.center, v); });
}

}  // namespace qec
