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

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "qec/criteria.hpp"
#include "qec/enumerate.hpp"
#include "qec/error.hpp"
#include "qec/gadget.hpp"
#include "qec/graph.hpp"
#include "qec/plane.hpp"
#include "qec/qcc.hpp"
#include "qec/synthesis.hpp"

namespace qec {

using json = nlohmann::json;

inline json graph_to_json(const Graph& g) {
  json out{{"n", g.order()}, {"edges", json::array()}};
  for (auto [u, v] : g.edges()) out["edges"].push_back({u, v});
  if (g.has_labels()) out["labels"] = g.labels();
  return out;
}

inline json plane_to_json(const PlaneGraph& pg) {
  json out = graph_to_json(pg.graph());
  out["rotations"] = pg.rotation();
  return out;
}

inline Graph graph_from_json(const json& j) {
  try {
    const std::size_t n = j.at("n").get<std::size_t>();
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw Error(Errc::ParseError, "edge must be a pair");
      edges.emplace_back(e[0].get<Vertex>(), e[1].get<Vertex>());
    }
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
    return Graph::build(n, edges, std::move(labels));
  } catch (const json::exception& e) {
    throw Error(Errc::ParseError, e.what());
  }
}

/// Uses the supplied rotations when present; otherwise the input must be
/// maximal planar and its unique embedding is recovered.
inline PlaneGraph plane_from_json(const json& j) {
  const Graph g = graph_from_json(j);
  if (!j.contains("rotations")) return mpg_faces(g);
  try {
    return embed_from_rotation(g, j.at("rotations").get<std::vector<std::vector<Vertex>>>());
  } catch (const json::exception& e) {
    throw Error(Errc::ParseError, e.what());
  }
}

inline PlaneGraph parse_plane(const std::string& text) {
  try {
    return plane_from_json(json::parse(text));
  } catch (const json::exception& e) {
    throw Error(Errc::ParseError, e.what());
  }
}

inline json profile_to_json(const EccentricityProfile& p) {
  json layers = json::object();
  for (const auto& [e, vs] : p.layers) layers[std::to_string(e)] = vs;
  return {{"radius", p.radius}, {"diameter", p.diameter}, {"center", p.center}, {"eccentricity", p.eccentricity},
          {"layers", layers}};
}

inline json configuration_to_json(const FaceConfiguration& cfg, const std::optional<CaseLabel>& label = {}) {
  json classes = json::object();
  for (const auto& [key, vs] : cfg.classes) classes[class_name(key)] = vs;
  json out{{"face", cfg.face.boundary}, {"k", cfg.k}, {"classes", classes}};
  if (label) {
    out["case"] = std::string(to_string(label->kind));
    out["relabel"] = label->relabel;
  }
  return out;
}

inline json verdict_to_json(const CriterionVerdict& v) {
  json witnesses = json::object();
  for (const auto& [u, f] : v.witness_map) witnesses[std::to_string(u)] = f.boundary;
  json out{{"pass", v.pass}, {"alpha", v.alpha}, {"witness_map", witnesses}};
  if (v.failing_vertex) {
    out["failing_vertex"] = *v.failing_vertex;
    out["failing_vertices"] = v.failing_vertices;
  }
  return out;
}

inline json cycle_verdict_to_json(const CycleConditionVerdict& v) {
  json out{{"pass", v.pass}, {"exact", v.exact}, {"cycles_examined", v.cycles_examined}};
  out["bound"] = v.bound ? json(*v.bound) : json(nullptr);
  if (v.counterexample) {
    out["counterexample"] = {{"cycle", v.counterexample->cycle}, {"a", v.counterexample->a}, {"b", v.counterexample->b}};
  }
  return out;
}

inline json gadget_spec_to_json(const GadgetSpec& s) {
  return {{"name", gadget_name(s)}, {"depth", s.depth}, {"subscripts", s.subscripts}, {"superscripts", s.superscripts}};
}

inline json gadget_to_json(const Gadget& g) {
  json out = plane_to_json(g.plane);
  out["spec"] = gadget_spec_to_json(g.spec);
  out["specials"] = g.specials;
  return out;
}

inline json report_to_json(const SynthesisReport& r, bool include_host = true) {
  json faces = json::array();
  for (const auto& f : r.faces) {
    json rec{{"face", f.face.boundary},
             {"case", std::string(to_string(f.label.kind))},
             {"k", f.configuration.k},
             {"delta", f.delta},
             {"exempt", f.exempt},
             {"gf_order", f.gf.order()}};
    if (f.gadget) rec["gadget"] = gadget_spec_to_json(*f.gadget);
    faces.push_back(std::move(rec));
  }
  json out{{"alpha", r.alpha},
           {"faces", faces},
           {"host_order", r.host.order()},
           {"host_size", r.host.size()},
           {"embedding", r.embedding},
           {"radius", r.radius},
           {"diameter", r.diameter},
           {"is_equi_eccentric", r.equi_eccentric},
           {"is_center_subset", r.center_subset},
           {"is_exact_center", r.exact_center},
           {"removed_vertices", r.removed_vertices}};
  json ecc = json::array();
  for (const Vertex v : r.embedding) ecc.push_back(r.eccentricity[v]);
  out["h_eccentricities"] = ecc;
  if (include_host) out["host"] = r.host_plane ? plane_to_json(*r.host_plane) : graph_to_json(r.host);
  return out;
}

inline json census_row_to_json(const CensusRow& r) {
  json hist = json::object();
  for (const auto& [k, c] : r.case_histogram) hist[std::string(to_string(k))] = c;
  json out{{"code", r.code.hex()},     {"order", r.order},       {"diam", r.diameter},
           {"radius", r.radius},       {"center_size", r.center_size}, {"qef_pass", r.qef_pass},
           {"case_histogram", hist}};
  if (!r.qef_pass) out["failing_vertices"] = r.failing_vertices;
  if (r.synthesis) {
    out["synthesis"] = {{"is_equi_eccentric", r.synthesis->equi_eccentric},
                        {"is_center_subset", r.synthesis->center_subset},
                        {"host_radius", r.synthesis->host_radius},
                        {"host_order", r.synthesis->host_order}};
  }
  return out;
}

/// Graphviz rendering; highlighted vertices are filled black.
inline std::string to_dot(const Graph& g, const VertexSet& highlight = {}, const std::string& name = "G") {
  std::ostringstream os;
  os << "graph \"" << name << "\" {\n  node [shape=circle];\n";
  for (Vertex v = 0; v < g.order(); ++v) {
    os << "  " << v << " [label=\"" << g.label(v) << "\"";
    if (contains(highlight, v)) os << ", style=filled, fillcolor=black, fontcolor=white";
    os << "];\n";
  }
  for (auto [u, v] : g.edges()) os << "  " << u << " -- " << v << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace qec
