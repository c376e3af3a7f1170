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

#include "oracle.hpp"
#include "qec/qec.hpp"

namespace qec {
namespace {

using oracle::error_code;

TEST(Gamma, SmallDepths) {
  const Gadget g0 = build_gamma({0, 0, 0});
  EXPECT_EQ(g0.plane.order(), 3u);
  EXPECT_FALSE(g0.s.has_value());
  const Gadget g1 = build_gamma({1, 0, 0});
  EXPECT_TRUE(oracle::isomorphic(g1.plane.graph(), k4()));
  const Gadget g3 = build_gamma({3, 0, 0});
  EXPECT_EQ(g3.plane.order(), 16u);  // 9 frame + 1 apex + 6 stellations
  EXPECT_EQ(g3.plane.graph().size(), 3 * 16 - 6);
}

TEST(Gamma, DecoratedDistances) {
  const Gadget g = build_gamma({2, 1, 0});
  const auto& d = g.plane.graph().distances();
  const Vertex tx = *g.t[0];
  EXPECT_EQ(d.hops(g.terminals[0], tx), 3u);
  EXPECT_EQ(d.hops(g.terminals[1], tx), 2u);
  EXPECT_EQ(d.hops(g.terminals[2], tx), 2u);
  EXPECT_EQ(g.specials.at("t_x"), tx);
  EXPECT_EQ(g.plane.graph().label(tx), "t_x");
}

TEST(Gamma, FullyDecorated) {
  const Gadget g = build_gamma({2, 7, 7});
  EXPECT_EQ(gadget_name(g.spec), "Gamma_xyz^xy,yz,zx(2)");
  EXPECT_EQ(g.plane.order(), 6u + 1 + 3 + 3 + 3);
  const auto& d = g.plane.graph().distances();
  EXPECT_EQ(d.hops(g.terminals[0], *g.t_pair[0]), 3u);
  EXPECT_EQ(d.hops(g.terminals[2], *g.t_pair[0]), 2u);
  EXPECT_EQ(d.hops(g.terminals[0], *g.t_pair[2]), 3u);
  EXPECT_TRUE(gadget_distance_audit(g).ok);
}

TEST(Gamma, InvalidSpecs) {
  EXPECT_EQ(error_code([] { build_gamma({0, 1, 0}); }), Errc::InvalidSpec);
  EXPECT_EQ(error_code([] { build_gamma({2, 0, 1}); }), Errc::InvalidSpec);   // xy needs x
  EXPECT_EQ(error_code([] { build_gamma({2, 4, 4}); }), Errc::InvalidSpec);   // zx hangs off x
  EXPECT_EQ(error_code([] { build_gamma({2, 8, 0}); }), Errc::InvalidSpec);
  EXPECT_NO_THROW(build_gamma({2, 1, 4}));
}

TEST(Gamma, ShapeCatalogue) {
  const auto shapes = valid_gadget_shapes();
  EXPECT_EQ(shapes.size(), 30u);
  for (auto [subs, sups] : shapes) {
    for (std::uint32_t depth = 1; depth <= 6; ++depth) {
      const Gadget g = build_gamma({depth, subs, sups});
      const GadgetAudit audit = gadget_distance_audit(g);
      EXPECT_TRUE(audit.ok) << gadget_name(g.spec) << ": " << (audit.violations.empty() ? "" : audit.violations[0]);
      const std::size_t expected = 3 * depth + 1 + 3 * (depth - 1) + std::popcount(subs) + std::popcount(sups);
      EXPECT_EQ(g.plane.order(), expected);
    }
  }
}

TEST(Glue, VertexCountsAndIsometry) {
  const PlaneGraph t = mpg_faces(k4());
  const Glued a = glue(t, t.face(0), build_gamma({1, 0, 0}));
  EXPECT_EQ(a.plane.order(), 5u);
  EXPECT_EQ(a.plane.graph().size(), 9u);

  const PlaneGraph oct = mpg_faces(octahedron());
  for (const FaceRef& f : oct.faces()) {
    const Glued b = glue(oct, f, build_gamma({2, 7, 7}));
    EXPECT_EQ(b.plane.order(), 6u + 16 - 3);
    EXPECT_TRUE(is_isometric_subgraph(oct.graph(), b.plane.graph(), b.host_map).isometric);
    for (int p = 0; p < 3; ++p) EXPECT_EQ(b.gadget_map[p], f.boundary[p]);
  }
}

TEST(Glue, FaceMismatch) {
  const PlaneGraph oct = mpg_faces(octahedron());
  // 0 and 1 are antipodal, so {0, 1, 2} is not a face.
  EXPECT_EQ(error_code([&] { glue(oct, FaceRef{0, {0, 1, 2}}, build_gamma({1, 0, 0})); }), Errc::FaceMismatch);
  EXPECT_EQ(error_code([&] { glue(oct, FaceRef{0, {0, 2}}, build_gamma({1, 0, 0})); }), Errc::FaceMismatch);
}

}  // namespace
}  // namespace qec
