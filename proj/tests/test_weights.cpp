#include <gtest/gtest.h>

#include "adefam/weights.hpp"

using namespace adefam;

TEST(WeightMaps, AtInfinity) {
  EXPECT_EQ(weight_at_infinity({0, 1}), (WeightPair{0, 1}));
  EXPECT_EQ(weight_at_infinity({1, -1}), (WeightPair{-1, 1}));
  EXPECT_EQ(weight_at_infinity({0, 2}), (WeightPair{0, 2}));
}

TEST(WeightMaps, PlumbStep) {
  EXPECT_EQ(plumb_step({0, 2}), (WeightPair{2, 0}));
  EXPECT_EQ(plumb_step({-2, 4}), (WeightPair{0, 2}));
  EXPECT_EQ(plumb_step({0, 0}), (WeightPair{0, 0}));
  for (std::int64_t a = -5; a <= 5; ++a)
    for (std::int64_t b = -5; b <= 5; ++b) {
      EXPECT_EQ(plumb_step_inverse(plumb_step({a, b})), (WeightPair{a, b}));
      // a + b is preserved, so the sum-of-2 normalisation propagates.
      const auto s = plumb_step({a, b});
      EXPECT_EQ(s.a + s.b, a + b);
    }
}

TEST(Propagate, Examples) {
  EXPECT_EQ(propagate_weights(build_diagram(Family::A, 3)).vertex_weights(),
            (std::vector<WeightPair>{{-2, 4}, {0, 2}, {2, 0}}));
  EXPECT_EQ(propagate_weights(build_diagram(Family::D, 4)).vertex_weights(),
            (std::vector<WeightPair>{{-2, 4}, {0, 2}, {2, 0}, {2, 0}}));
  EXPECT_EQ(propagate_weights(build_diagram(Family::A, 1)).vertex_weights(), (std::vector<WeightPair>{{0, 2}}));
}

TEST(Propagate, ClosedFormsUpToRank12) {
  std::vector<DynkinDiagram> gs;
  for (int n = 1; n <= 12; ++n) gs.emplace_back(Family::A, n);
  for (int n = 4; n <= 12; ++n) gs.emplace_back(Family::D, n);
  for (int n = 6; n <= 8; ++n) gs.emplace_back(Family::E, n);
  for (const auto& g : gs) {
    const auto w = propagate_weights(g);
    const int n = g.rank();
    for (int i = 1; i <= n; ++i) {
      // Explicit tables, written out independently of closed_form_weights.
      WeightPair expect;
      if (g.family() == Family::A) {
        expect = {-n + 2 * i - 1, n - 2 * i + 3};
      } else {
        const int hub = g.family() == Family::D ? n - 2 : n - 3;
        if (i == n) expect = {2, 0};
        else expect = {2 * (i - hub), 2 - 2 * (i - hub)};
      }
      EXPECT_EQ(w.at(i - 1), expect) << g.name() << " vertex " << i;
      EXPECT_EQ(w.at(i - 1).a + w.at(i - 1).b, 2);
    }
    for (const auto& e : g.edges()) EXPECT_EQ(w.w(e.u, e.v) + w.w(e.v, e.u), 2) << g.name();
    EXPECT_EQ(w.vertex_weights(), closed_form_weights(g));
  }
}

TEST(Propagate, EdgeWeightsFollowAttachment) {
  const auto w = propagate_weights(build_diagram(Family::A, 2));
  EXPECT_EQ(w.w(0, 1), 1);
  EXPECT_EQ(w.w(1, 0), 1);
  const auto d = propagate_weights(build_diagram(Family::D, 4));
  EXPECT_EQ(d.w(1, 3), 0);
  EXPECT_EQ(d.w(3, 1), 2);
}

TEST(Propagate, Errors) {
  const auto g = build_diagram(Family::A, 3);
  try {
    edge_weights(g, {{0, 2}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::MissingVertexWeight);
  }
  try {
    (void)propagate_weights(g).w(0, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotAdjacent);
  }
}
