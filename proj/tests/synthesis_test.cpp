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

#include <gtest/gtest.h>

#include <random>

#include "oracle.hpp"
#include "qec/qec.hpp"

namespace qec {
namespace {

using oracle::error_code;

void expect_certified(const SynthesisReport& rep) {
  EXPECT_TRUE(rep.equi_eccentric);
  EXPECT_EQ(rep.radius, rep.alpha);
  EXPECT_TRUE(rep.center_subset);
  EXPECT_TRUE(is_isometric_subgraph(rep.h.graph(), rep.host, rep.embedding).isometric);
  ASSERT_TRUE(rep.host_plane.has_value());
  EXPECT_TRUE(rep.host_plane->all_faces_triangles());
  const auto ecc = oracle::eccentricities(rep.host);
  for (const Vertex v : rep.embedding) EXPECT_EQ(static_cast<Hops>(ecc[v]), rep.alpha);
}

TEST(BuildGf, GStarIsCaseSix) {
  const Fixture gs = load_fixture("g-star");
  const FaceRef f = gs.face(gs.set("face"));
  const FaceSynthesis fs = build_gf(*gs.plane, f, 3);
  EXPECT_EQ(fs.label.kind, CaseKind::Case6);
  EXPECT_EQ(fs.delta, 1u);
  ASSERT_TRUE(fs.gadget.has_value());
  EXPECT_EQ(*fs.gadget, (GadgetSpec{1, 7, 7}));
  EXPECT_EQ(error_code([&] { build_gf(*gs.plane, f, 2); }), Errc::AlphaTooSmall);
}

TEST(BuildGf, CaseGadgetsFollowTheRelabel) {
  CaseLabel lab{CaseKind::Case4_2, {1, 0, 2}};
  const GadgetSpec s = gadget_for_case(lab, 3);
  EXPECT_EQ(s.depth, 3u);
  EXPECT_EQ(s.subscripts, 1 | 4);
  EXPECT_EQ(s.superscripts, pair_bit(0, 2));
  EXPECT_NO_THROW(validate(s));
  for (const CaseKind kind : {CaseKind::Case1, CaseKind::Case3, CaseKind::Case4_1, CaseKind::Case4_2,
                              CaseKind::Case5_1, CaseKind::Case5_2, CaseKind::Case5_3, CaseKind::Case6}) {
    std::array<std::uint8_t, 3> perm{0, 1, 2};
    do {
      EXPECT_NO_THROW(validate(gadget_for_case(CaseLabel{kind, perm}, 2))) << to_string(kind);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
}

TEST(BuildSupergraph, OctahedronAtItsDiameterIsUnchanged) {
  const PlaneGraph oct = mpg_faces(octahedron());
  const SynthesisReport rep = build_supergraph(oct, 2);
  EXPECT_EQ(rep.host.order(), 6u);
  EXPECT_EQ(rep.host, oct.graph());
  for (const auto& fs : rep.faces) EXPECT_TRUE(fs.exempt);
  expect_certified(rep);
}

TEST(BuildSupergraph, K4AtOne) {
  const SynthesisReport rep = build_supergraph(mpg_faces(k4()), 1);
  EXPECT_EQ(rep.host.order(), 4u);
  expect_certified(rep);
}

TEST(BuildSupergraph, RaisesEccentricity) {
  for (const char* name : {"g-star", "h1", "h2", "icosahedron", "octahedron", "k4", "disc-center"}) {
    const Fixture f = load_fixture(name);
    const Hops diam = eccentricity_profile(f.graph).diameter;
    for (Hops alpha = diam; alpha <= diam + 3; ++alpha) {
      SCOPED_TRACE(std::string(name) + " alpha " + std::to_string(alpha));
      const SynthesisReport rep = build_supergraph(*f.plane, alpha);
      expect_certified(rep);
      EXPECT_TRUE(verify_gluing_theorem(rep.parts).holds());
    }
  }
}

TEST(BuildSupergraph, CriterionFailure) {
  const Fixture g9 = load_fixture("g9");
  EXPECT_EQ(error_code([&] { build_supergraph(*g9.plane, 2); }), Errc::CriterionFails);
  EXPECT_EQ(error_code([&] { build_supergraph(*g9.plane, 1); }), Errc::AlphaTooSmall);
}

TEST(BuildCenterHost, ExactCenter) {
  struct Case {
    Graph g;
    Hops alpha;
  };
  const Fixture h1 = load_fixture("h1");
  for (const auto& [g, alpha] : {Case{octahedron(), 5}, Case{k4(), 4}, Case{h1.graph, 6}}) {
    const SynthesisReport rep = build_center_host(mpg_faces(g), alpha);
    EXPECT_TRUE(rep.exact_center);
    EXPECT_GT(rep.removed_vertices, 0u);
    EXPECT_EQ(eccentricity_profile(rep.host).center, make_vertex_set(rep.embedding));
    EXPECT_FALSE(far_face_violation(rep).has_value());
    EXPECT_TRUE(is_isometric_subgraph(g, rep.host, rep.embedding).isometric);
  }
  EXPECT_EQ(error_code([] { build_center_host(mpg_faces(octahedron()), 4); }), Errc::AlphaTooSmall);
}

TEST(Hedetniemi, CenterIsTheInputGraph) {
  for (const Graph& g : {path_graph(1), path_graph(3), load_fixture("hedetniemi-star").graph, cycle_graph(5),
                         build_graph(4, {{0, 1}, {2, 3}})}) {
    const HedetniemiHost host = hedetniemi(g);
    EXPECT_EQ(host.graph.order(), g.order() + 4);
    EXPECT_EQ(eccentricity_profile(host.graph).center, make_vertex_set(host.embedding));
  }
}

TEST(GluingTheorem, TwoTrianglesOnAnEdge) {
  const Graph k3 = complete_graph(3);
  const std::vector<GluingPart> parts{{k3, {0, 1, 2}}, {k3, {0, 1, 3}}};
  const GluingCheck check = verify_gluing_theorem(parts);
  EXPECT_TRUE(check.holds());
  EXPECT_EQ(check.shared, (VertexSet{0, 1}));
}

TEST(GluingTheorem, EccentricityIsTheMaximum) {
  // Two paths glued at their middle vertex.
  const std::vector<GluingPart> parts{{path_graph(3), {10, 0, 11}}, {path_graph(5), {20, 21, 0, 22, 23}}};
  const GluingCheck check = verify_gluing_theorem(parts);
  EXPECT_TRUE(check.holds());
  EXPECT_EQ(check.shared, VertexSet{0});
}

TEST(GluingTheorem, Hypotheses) {
  const Graph k3 = complete_graph(3);
  EXPECT_EQ(error_code([] { verify_gluing_theorem({}); }), Errc::HypothesisViolated);
  EXPECT_EQ(error_code([&] { verify_gluing_theorem({{k3, {0, 1, 2}}, {k3, {3, 4, 5}}}); }), Errc::HypothesisViolated);
  EXPECT_EQ(error_code([&] { verify_gluing_theorem({{k3, {0, 1, 2}}, {k3, {0, 1, 3}}, {k3, {0, 2, 4}}}); }),
            Errc::HypothesisViolated);
  // Shared vertices 0 and 2 are adjacent in one part only, so S is disconnected.
  EXPECT_EQ(error_code([&] { verify_gluing_theorem({{k3, {0, 1, 2}}, {path_graph(3), {0, 5, 2}}}); }),
            Errc::HypothesisViolated);
}

TEST(EquiInCenter, Icosahedron) {
  const PlaneGraph ico = mpg_faces(icosahedron());
  const SynthesisReport rep = build_supergraph(ico, 4);
  EXPECT_TRUE(verify_equi_in_center(ico, rep.host, rep.embedding));
  const std::vector<Vertex> identity = rep.embedding;
  EXPECT_TRUE(verify_equi_in_center(ico, ico.graph(), identity));
}

TEST(EquiInCenter, Preconditions) {
  const PlaneGraph oct = mpg_faces(octahedron());
  const std::vector<Vertex> id{0, 1, 2, 3, 4, 5};
  EXPECT_EQ(error_code([&] { verify_equi_in_center(oct, oct.graph(), id); }), Errc::PreconditionFailed);
  const PlaneGraph ico = mpg_faces(icosahedron());
  const HedetniemiHost host = hedetniemi(ico.graph());
  // A single pendant breaks equi-eccentricity.
  std::vector<Edge> edges(ico.graph().edges());
  edges.emplace_back(0, 12);
  const Graph leafy = Graph::build(13, edges);
  std::vector<Vertex> emb(12);
  for (Vertex v = 0; v < 12; ++v) emb[v] = v;
  EXPECT_EQ(error_code([&] { verify_equi_in_center(ico, leafy, emb); }), Errc::PreconditionFailed);
  EXPECT_TRUE(verify_equi_in_center(ico, host.graph, host.embedding));
}

TEST(BuildSupergraph, RandomPassingGraphs) {
  std::mt19937 rng(31);
  int built = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const PlaneGraph h = oracle::random_mpg(rng, 5 + trial % 8, 30);
    const Hops diam = eccentricity_profile(h.graph()).diameter;
    if (!qef_criterion(h, diam).pass) continue;
    const SynthesisReport rep = build_supergraph(h, diam + 1);
    expect_certified(rep);
    ++built;
  }
  EXPECT_GT(built, 10);
}

}  // namespace
}  // namespace qec
