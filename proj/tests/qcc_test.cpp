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

TEST(QccSet, PathExample) {
  const Fixture p5 = load_fixture("p5-qcc");
  const QccResult r = qcc_set(p5.graph, p5.set("S"));
  EXPECT_EQ(r.qcc, p5.vertices({"v1", "v5"}));
  EXPECT_EQ(r.ecc, p5.vertices({"v5"}));
  EXPECT_EQ(r.e, 2u);
  EXPECT_EQ(r.q, 1u);
}

TEST(QccSet, WholeVertexSet) {
  const Graph g = icosahedron();
  VertexSet all(12);
  for (Vertex v = 0; v < 12; ++v) all[v] = v;
  const QccResult r = qcc_set(g, all);
  EXPECT_EQ(r.qcc, all);
  EXPECT_EQ(r.q, 0u);
  EXPECT_EQ(r.e, 0u);
}

TEST(QccSet, Errors) {
  EXPECT_EQ(error_code([] { qcc_set(k4(), VertexSet{}); }), Errc::EmptySet);
  EXPECT_EQ(error_code([] { qcc_set(build_graph(3, {{0, 1}}), VertexSet{0}); }), Errc::Disconnected);
}

TEST(QccSet, AgreesWithQuantifierOracle) {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    const Graph g = oracle::random_connected(rng, 2 + trial % 12, 0.2);
    std::vector<Vertex> pick;
    for (Vertex v = 0; v < g.order(); ++v)
      if (std::bernoulli_distribution(0.3)(rng)) pick.push_back(v);
    if (pick.empty()) pick.push_back(0);
    const VertexSet s = make_vertex_set(pick);
    const QccResult r = qcc_set(g, s);
    EXPECT_EQ(r.qcc, oracle::brute_qcc(g, s));
    EXPECT_TRUE(std::includes(r.qcc.begin(), r.qcc.end(), r.ecc.begin(), r.ecc.end()));
    EXPECT_LE(r.q, r.e);
    EXPECT_EQ(r.q, set_distance(g, s, r.qcc));
    EXPECT_EQ(r.e, set_distance(g, s, r.ecc));
  }
}

TEST(QccSet, DominatedVerticesAreQuasiEccentric) {
  std::mt19937 rng(19);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = oracle::random_connected(rng, 3 + trial % 10, 0.25);
    // Grow a random dominating set.
    std::vector<Vertex> order(g.order());
    for (Vertex v = 0; v < order.size(); ++v) order[v] = v;
    std::shuffle(order.begin(), order.end(), rng);
    VertexSet all = make_vertex_set(order);
    std::vector<Vertex> s;
    for (const Vertex v : order) {
      if (dominates(g, make_vertex_set(s), all)) break;
      s.push_back(v);
    }
    const VertexSet set = make_vertex_set(s);
    const VertexSet qcc = qcc_set(g, set).qcc;
    for (Vertex u = 0; u < g.order(); ++u) {
      if (!contains(set, u)) {
        EXPECT_TRUE(contains(qcc, u)) << "vertex " << u;
      }
    }
  }
}

TEST(DistanceVector, GStar) {
  const Fixture gs = load_fixture("g-star");
  const FaceRef f = gs.face(gs.set("face"));
  EXPECT_EQ(distance_vector(gs.graph, gs.vertex("a"), f), (DistanceVector{1, 1, 2}));
  EXPECT_EQ(distance_vector(gs.graph, gs.vertex("b"), f), (DistanceVector{2, 2, 2}));
  EXPECT_EQ(distance_vector(gs.graph, gs.vertex("c"), f), (DistanceVector{1, 2, 2}));
  EXPECT_EQ(distance_vector(gs.graph, gs.vertex("x"), f)[0], 0u);
  EXPECT_EQ(error_code([&] { distance_vector(gs.graph, 0, FaceRef{0, {0, 1}}); }), Errc::NotTriangle);
}

TEST(FaceConfiguration, GStar) {
  const Fixture gs = load_fixture("g-star");
  const FaceConfiguration cfg = face_configuration(*gs.plane, gs.face(gs.set("face")));
  EXPECT_EQ(cfg.k, 1u);
  EXPECT_EQ(class_name(cfg.membership.at(gs.vertex("a"))), "(k)_xy^z");
  EXPECT_EQ(class_name(cfg.membership.at(gs.vertex("b"))), "(k+1)_xyz");
  EXPECT_EQ(class_name(cfg.membership.at(gs.vertex("c"))), "(k)_x^yz");
  EXPECT_EQ(class_name(cfg.membership.at(gs.vertex("d"))), "(k)_y^xz");
  EXPECT_EQ(classify_case(cfg).kind, CaseKind::Case6);
}

TEST(FaceConfiguration, FaceVerticesCountUnderTheDefinition) {
  // The boundary vertices are themselves quasi-eccentric, so k = 0 here.
  const PlaneGraph t = mpg_faces(k4());
  for (const FaceRef& f : t.faces()) {
    const auto cfg = face_configuration(t, f);
    EXPECT_EQ(cfg.k, 0u);
    Vertex apex = 0;
    while (contains(f.boundary, apex)) ++apex;
    EXPECT_EQ(class_name(cfg.membership.at(apex)), "(k+1)_xyz");
    EXPECT_EQ(classify_case(cfg).kind, CaseKind::Case6);
  }
  const PlaneGraph oct = mpg_faces(octahedron());
  for (const FaceRef& f : oct.faces()) {
    const auto cfg = face_configuration(oct, f);
    EXPECT_EQ(cfg.k, 0u);
    EXPECT_EQ(cfg.qcc.size(), 6u);
  }
}

TEST(FaceConfiguration, RequiresTriangulation) {
  const Fixture sep = load_fixture("sepcycles");
  EXPECT_EQ(error_code([&] { face_configuration(*sep.plane, sep.plane->face(0)); }), Errc::NotMaximalPlanar);
}

// Hand-built configurations exercise every branch of the classifier.
FaceConfiguration synthetic(std::initializer_list<std::pair<ClassKey, Vertex>> members) {
  FaceConfiguration cfg;
  cfg.face = FaceRef{0, {0, 1, 2}};
  cfg.k = 1;
  for (auto [key, v] : members) {
    cfg.classes[key].push_back(v);
    cfg.membership[v] = key;
  }
  return cfg;
}

TEST(ClassifyCase, EveryBranch) {
  constexpr PositionMask X = 1, Y = 2, Z = 4;
  EXPECT_EQ(classify_case(synthetic({{{0, X}, 10}})).kind, CaseKind::Case1);
  const CaseLabel c3 = classify_case(synthetic({{{1, X}, 10}, {{1, Y}, 11}, {{0, Z}, 12}}));
  EXPECT_EQ(c3.kind, CaseKind::Case3);
  EXPECT_EQ(c3.to_positions(Z), Z);
  const CaseLabel c3b = classify_case(synthetic({{{1, Y}, 10}, {{1, Z}, 11}, {{0, X}, 12}}));
  EXPECT_EQ(c3b.kind, CaseKind::Case3);
  EXPECT_EQ(c3b.to_positions(Z), X);
  const CaseLabel c41 = classify_case(synthetic({{{1, Z}, 10}, {{0, X | Y | Z}, 11}}));
  EXPECT_EQ(c41.kind, CaseKind::Case4_1);
  EXPECT_EQ(c41.to_positions(X), Z);
  const CaseLabel c42 = classify_case(synthetic({{{1, Y}, 10}, {{0, X | Z}, 11}}));
  EXPECT_EQ(c42.kind, CaseKind::Case4_2);
  EXPECT_EQ(c42.to_positions(Y | Z), X | Z);
  EXPECT_EQ(classify_case(synthetic({{{1, X | Y}, 1}, {{1, Y | Z}, 2}, {{1, X | Z}, 3}})).kind, CaseKind::Case5_1);
  const CaseLabel c52 = classify_case(synthetic({{{1, X | Y}, 1}, {{1, Y | Z}, 2}, {{0, Z}, 3}}));
  EXPECT_EQ(c52.kind, CaseKind::Case5_2);
  EXPECT_EQ(c52.to_positions(Y | Z), X | Z);
  const CaseLabel c53 = classify_case(synthetic({{{1, Y | Z}, 1}, {{0, X}, 3}}));
  EXPECT_EQ(c53.kind, CaseKind::Case5_3);
  EXPECT_EQ(c53.to_positions(X | Y), Y | Z);
  EXPECT_EQ(classify_case(synthetic({{{1, X | Y | Z}, 1}, {{0, X}, 3}})).kind, CaseKind::Case6);
  EXPECT_EQ(error_code([] { classify_case(synthetic({{{1, X}, 1}, {{1, Y}, 2}, {{1, Z}, 3}})); }),
            Errc::UnclassifiableConfiguration);
}

TEST(ClassifyCase, LabelIsDeterministicUnderRelabelling) {
  // Same configuration presented under every permutation of face positions
  // yields the same case.
  constexpr PositionMask X = 1, Y = 2, Z = 4;
  std::array<std::uint8_t, 3> perm{0, 1, 2};
  auto apply = [&](PositionMask m) {
    PositionMask out = 0;
    for (int i = 0; i < 3; ++i)
      if ((m >> i) & 1) out |= static_cast<PositionMask>(1u << perm[i]);
    return out;
  };
  do {
    const auto cfg = synthetic({{{1, apply(X)}, 1}, {{0, apply(Y | Z)}, 2}});
    const CaseLabel lab = classify_case(cfg);
    EXPECT_EQ(lab.kind, CaseKind::Case4_2);
    EXPECT_EQ(lab.to_positions(X), apply(X));
  } while (std::next_permutation(perm.begin(), perm.end()));
}

TEST(FaceConfiguration, LemmaInvariantsOnEnumeratedGraphs) {
  std::size_t faces = 0;
  for (std::size_t n = 4; n <= 8; ++n) {
    for (const auto& m : enumerate_mpgs(n)) {
      for (const FaceRef& f : m.plane.faces()) {
        const auto cfg = face_configuration(m.plane, f);  // throws on any violated invariant
        EXPECT_EQ(cfg.qcc, oracle::brute_qcc(m.plane.graph(), f.boundary));
        EXPECT_NO_THROW(classify_case(cfg));
        ++faces;
      }
    }
  }
  EXPECT_GT(faces, 0u);
}

}  // namespace
}  // namespace qec
