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

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qec/error.hpp"
#include "qec/graph.hpp"
#include "qec/plane.hpp"

namespace qec {

/// Pair masks for decorations t_pq: bit 0 = xy, bit 1 = yz, bit 2 = zx.
using PairMask = std::uint8_t;

inline constexpr std::array<std::pair<int, int>, 3> kPairs{{{0, 1}, {1, 2}, {2, 0}}};

/// The decoration t_pq hangs off t_p for the alphabetically first of p, q.
constexpr int pair_anchor(int pair) { return std::min(kPairs[pair].first, kPairs[pair].second); }
constexpr int pair_third(int pair) { return 3 - kPairs[pair].first - kPairs[pair].second; }

/// Mask of the pair {p, q} of distinct face positions.
constexpr PairMask pair_bit(int p, int q) {
  for (int i = 0; i < 3; ++i) {
    if ((kPairs[i].first == p && kPairs[i].second == q) || (kPairs[i].first == q && kPairs[i].second == p)) {
      return static_cast<PairMask>(1u << i);
    }
  }
  return 0;
}

struct GadgetSpec {
  std::uint32_t depth = 0;
  std::uint8_t subscripts = 0;  // x = 1, y = 2, z = 4
  PairMask superscripts = 0;

  friend auto operator<=>(const GadgetSpec&, const GadgetSpec&) = default;
};

inline std::string gadget_name(const GadgetSpec& spec) {
  static constexpr char kLetters[] = "xyz";
  static constexpr const char* kPairNames[] = {"xy", "yz", "zx"};
  std::string out = "Gamma";
  if (spec.subscripts) {
    out += "_";
    for (int p = 0; p < 3; ++p) {
      if ((spec.subscripts >> p) & 1) out += kLetters[p];
    }
  }
  if (spec.superscripts) {
    out += "^";
    bool first = true;
    for (int i = 0; i < 3; ++i) {
      if (!((spec.superscripts >> i) & 1)) continue;
      if (!first) out += ",";
      out += kPairNames[i];
      first = false;
    }
  }
  return out + "(" + std::to_string(spec.depth) + ")";
}

inline void validate(const GadgetSpec& spec) {
  if (spec.subscripts > 7 || spec.superscripts > 7) throw Error(Errc::InvalidSpec, "decoration mask out of range");
  if (spec.depth == 0 && (spec.subscripts || spec.superscripts)) {
    throw Error(Errc::InvalidSpec, "depth 0 admits no decorations");
  }
  for (int i = 0; i < 3; ++i) {
    if (((spec.superscripts >> i) & 1) && !((spec.subscripts >> pair_anchor(i)) & 1)) {
      throw Error(Errc::InvalidSpec, gadget_name(spec) + ": superscript needs its anchor subscript");
    }
  }
}

/// Every (subscripts, superscripts) combination accepted by validate at depth >= 1.
inline std::vector<std::pair<std::uint8_t, PairMask>> valid_gadget_shapes() {
  std::vector<std::pair<std::uint8_t, PairMask>> out;
  for (std::uint8_t subs = 0; subs < 8; ++subs) {
    for (PairMask sups = 0; sups < 8; ++sups) {
      try {
        validate(GadgetSpec{1, subs, sups});
        out.emplace_back(subs, sups);
      } catch (const Error&) {
      }
    }
  }
  return out;
}

struct Gadget {
  GadgetSpec spec;
  PlaneGraph plane;
  std::array<Vertex, 3> terminals{0, 1, 2};  // x0, y0, z0
  std::optional<Vertex> s;
  std::array<std::optional<Vertex>, 3> t;       // t_x, t_y, t_z
  std::array<std::optional<Vertex>, 3> t_pair;  // t_xy, t_yz, t_zx
  std::map<std::string, Vertex> specials;

  /// Frame vertex p_i.
  static constexpr Vertex frame(std::uint32_t layer, int p) { return 3 * layer + static_cast<Vertex>(p); }
};

/// Builds the layered frame P_depth x C_3 with apex s inside the innermost
/// triangle, stellates every quadrilateral, and then adds the requested
/// decorations.
inline Gadget build_gamma(const GadgetSpec& spec) {
  validate(spec);
  static constexpr char kLetters[] = "xyz";
  static constexpr const char* kPairNames[] = {"xy", "yz", "zx"};
  Gadget out;
  out.spec = spec;
  const std::uint32_t d = spec.depth;
  std::vector<Edge> edges;
  std::vector<std::string> labels;

  const std::uint32_t layers = d == 0 ? 1 : d;
  for (std::uint32_t i = 0; i < layers; ++i) {
    for (int p = 0; p < 3; ++p) labels.push_back(std::string(1, kLetters[p]) + std::to_string(i));
    for (auto [p, q] : kPairs) edges.emplace_back(Gadget::frame(i, p), Gadget::frame(i, q));
    if (i + 1 < layers) {
      for (int p = 0; p < 3; ++p) edges.emplace_back(Gadget::frame(i, p), Gadget::frame(i + 1, p));
    }
  }
  Vertex next = 3 * layers;
  auto add_vertex = [&](std::string name, std::initializer_list<Vertex> nbrs) {
    const Vertex v = next++;
    for (const Vertex w : nbrs) edges.emplace_back(w, v);
    labels.push_back(name);
    out.specials.emplace(std::move(name), v);
    return v;
  };

  if (d >= 1) {
    const std::uint32_t last = d - 1;
    out.s = add_vertex("s", {Gadget::frame(last, 0), Gadget::frame(last, 1), Gadget::frame(last, 2)});
    for (std::uint32_t i = 0; i + 1 < d; ++i) {
      for (auto [p, q] : kPairs) {
        add_vertex("w" + std::to_string(i) + kLetters[p] + kLetters[q],
                   {Gadget::frame(i, p), Gadget::frame(i, q), Gadget::frame(i + 1, p), Gadget::frame(i + 1, q)});
      }
    }
    for (int p = 0; p < 3; ++p) {
      if (!((spec.subscripts >> p) & 1)) continue;
      out.t[p] = add_vertex(std::string("t_") + kLetters[p],
                            {*out.s, Gadget::frame(last, (p + 1) % 3), Gadget::frame(last, (p + 2) % 3)});
    }
    for (int i = 0; i < 3; ++i) {
      if (!((spec.superscripts >> i) & 1)) continue;
      out.t_pair[i] = add_vertex(std::string("t_") + kPairNames[i],
                                 {*out.s, Gadget::frame(last, pair_third(i)), *out.t[pair_anchor(i)]});
    }
  }
  for (int p = 0; p < 3; ++p) out.specials.emplace(std::string(1, kLetters[p]) + "0", Gadget::frame(0, p));

  out.plane = mpg_faces(Graph::build(next, edges, std::move(labels)));
  return out;
}

struct GadgetAudit {
  bool ok = true;
  std::vector<std::string> violations;
};

/// Re-derives every promised terminal distance by BFS.
inline GadgetAudit gadget_distance_audit(const Gadget& gadget) {
  GadgetAudit out;
  const std::uint32_t d = gadget.spec.depth;
  if (d == 0 || !gadget.s) {
    out.ok = false;
    out.violations.push_back("audit requires depth at least 1");
    return out;
  }
  const Graph& g = gadget.plane.graph();
  const auto& dist = g.distances();
  const std::uint32_t last = d - 1;
  auto expect = [&](int p, Vertex v, Hops want, const std::string& what) {
    const Hops got = dist.hops(gadget.terminals[p], v);
    if (got != want) {
      out.violations.push_back("d(" + g.label(gadget.terminals[p]) + ", " + what + ") = " + std::to_string(got) +
                               ", expected " + std::to_string(want));
    }
  };
  for (int p = 0; p < 3; ++p) {
    std::vector<std::uint8_t> pinned(g.order(), 0);
    expect(p, *gadget.s, d, "s");
    pinned[*gadget.s] = 1;
    for (int q = 0; q < 3; ++q) {
      const Vertex v = Gadget::frame(last, q);
      expect(p, v, q == p ? d - 1 : d, g.label(v));
      pinned[v] = 1;
      if (gadget.t[q]) {
        expect(p, *gadget.t[q], q == p ? d + 1 : d, g.label(*gadget.t[q]));
        pinned[*gadget.t[q]] = 1;
      }
    }
    for (int i = 0; i < 3; ++i) {
      if (!gadget.t_pair[i]) continue;
      const bool in_pair = kPairs[i].first == p || kPairs[i].second == p;
      expect(p, *gadget.t_pair[i], in_pair ? d + 1 : d, g.label(*gadget.t_pair[i]));
      pinned[*gadget.t_pair[i]] = 1;
    }
    for (Vertex v = 0; v < g.order(); ++v) {
      if (!pinned[v] && dist.hops(gadget.terminals[p], v) > d) {
        out.violations.push_back("d(" + g.label(gadget.terminals[p]) + ", " + g.label(v) + ") exceeds depth");
      }
    }
  }
  out.ok = out.violations.empty();
  return out;
}

struct Glued {
  PlaneGraph plane;
  std::vector<Vertex> host_map;    // host vertex -> result vertex
  std::vector<Vertex> gadget_map;  // gadget vertex -> result vertex
};

/// Identifies the gadget's terminals x0, y0, z0 with the face's sorted
/// boundary and embeds the rest inside the face.
inline Glued glue(const PlaneGraph& h, const FaceRef& face, const Gadget& gadget) {
  if (!face.is_triangle()) throw Error(Errc::FaceMismatch, "gadgets glue only into triangular faces");
  const auto found = h.find_face(face.boundary);
  if (!found) throw Error(Errc::FaceMismatch, "boundary is not a face of the host");
  const Graph& host = h.graph();
  const Graph& gg = gadget.plane.graph();
  const std::size_t n = host.order();

  Glued out;
  out.host_map.resize(n);
  for (Vertex v = 0; v < n; ++v) out.host_map[v] = v;
  out.gadget_map.resize(gg.order());
  for (Vertex v = 0; v < gg.order(); ++v) {
    out.gadget_map[v] = v < 3 ? face.boundary[v] : static_cast<Vertex>(n + v - 3);
  }
  std::vector<Edge> edges(host.edges());
  for (auto [a, b] : gg.edges()) {
    const Vertex u = out.gadget_map[a];
    const Vertex v = out.gadget_map[b];
    if (!host.adjacent(u, v)) edges.emplace_back(u, v);
  }
  std::vector<std::string> labels;
  if (host.has_labels()) {
    labels = host.labels();
    for (Vertex v = 3; v < gg.order(); ++v) labels.push_back("f" + std::to_string(face.id) + "." + gg.label(v));
  }
  out.plane = mpg_faces(Graph::build(n + gg.order() - 3, edges, std::move(labels)));
  return out;
}

}  // namespace qec
