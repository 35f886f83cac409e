#include <gtest/gtest.h>

#include <random>

#include "adefam/intersect.hpp"

using namespace adefam;

namespace {

std::vector<DynkinDiagram> diagrams() {
  std::vector<DynkinDiagram> out;
  for (int n = 1; n <= 8; ++n) out.emplace_back(Family::A, n);
  for (int n = 4; n <= 8; ++n) out.emplace_back(Family::D, n);
  for (int n = 6; n <= 8; ++n) out.emplace_back(Family::E, n);
  return out;
}

}  // namespace

TEST(Triple, SelfIntersectionIsEight) {
  for (const auto& g : diagrams()) {
    const TripleForm t(g);
    for (int i = 0; i < g.rank(); ++i) {
      EXPECT_EQ(t.triple_self(i), 8);
      EXPECT_EQ(t.p1_pairing(i), t.triple_self(i));
    }
  }
}

TEST(Triple, Mixed) {
  EXPECT_EQ(TripleForm(build_diagram(Family::A, 2)).triple_mixed(0, 1), -1);
  const TripleForm d4(build_diagram(Family::D, 4));
  EXPECT_EQ(d4.triple_mixed(1, 3), 0);
  EXPECT_EQ(d4.triple_mixed(3, 1), -2);
  try {
    d4.triple_mixed(0, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotAdjacent);
  }
}

TEST(Triple, TableIsSymmetricAndSparse) {
  const auto g = build_diagram(Family::E, 7);
  const TripleForm t(g);
  const int n = g.rank();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        const auto v = t(i, j, k);
        EXPECT_EQ(v, t(j, i, k));
        EXPECT_EQ(v, t(k, j, i));
        if (i != j && j != k && i != k) {
          EXPECT_EQ(v, 0);
        }
      }
}

TEST(Triple, ClassExamples) {
  const TripleForm a2(build_diagram(Family::A, 2));
  const IntVector e1{1, 0}, t11{1, 1}, zero{0, 0};
  EXPECT_EQ(a2.triple_of_class(e1), 8);
  EXPECT_EQ(a2.triple_of_class(t11), 10);
  EXPECT_EQ(a2.triple_of_class(zero), 0);
  EXPECT_EQ(4 * 10 - (8 + 8), a2.cubic(t11));
}

TEST(Cubic, Examples) {
  const TripleForm a1(build_diagram(Family::A, 1));
  const IntVector p{1}, m{-1};
  EXPECT_EQ(a1.cubic(p), 24);
  EXPECT_EQ(a1.cubic(m), -24);
  const TripleForm a2(build_diagram(Family::A, 2));
  const IntVector t11{1, 1};
  EXPECT_EQ(a2.cubic(t11), 24);
  for (const auto& g : diagrams()) {
    const TripleForm t(g);
    for (int k = 0; k < g.rank(); ++k) {
      IntVector e(g.rank(), 0);
      e[k] = 1;
      EXPECT_EQ(t.cubic(e), 24);
    }
  }
}

TEST(Cubic, OddAndBridgeIdentity) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::int64_t> dist(-9, 9);
  for (const auto& g : diagrams()) {
    const TripleForm t(g);
    for (int rep = 0; rep < 200; ++rep) {
      IntVector v(g.rank()), neg(g.rank());
      std::int64_t sum = 0;
      for (int i = 0; i < g.rank(); ++i) {
        v[i] = dist(rng);
        neg[i] = -v[i];
        sum += v[i];
      }
      EXPECT_EQ(t.cubic(neg), -t.cubic(v));
      EXPECT_EQ(4 * t.triple_of_class(v) - 8 * sum, t.cubic(v)) << g.name();
    }
  }
}

TEST(Verify, AllRootsAndHasseSteps) {
  for (const auto& g : diagrams()) {
    const auto rep = verify_f_on_roots(g);
    EXPECT_TRUE(rep.ok()) << g.name();
    EXPECT_EQ(static_cast<std::int64_t>(rep.root_count), root_count(g));
    EXPECT_EQ(rep.positive_ok, rep.negative_ok);
  }
  const auto e8 = verify_f_on_roots(build_diagram(Family::E, 8));
  EXPECT_EQ(e8.positive_ok, 120u);
  EXPECT_EQ(e8.negative_ok, 120u);
  EXPECT_EQ(verify_f_on_roots(build_diagram(Family::D, 5)).root_count, 40u);
}

TEST(Verify, DetectsWrongWeights) {
  // Swapping the roles of a and b breaks f on roots.
  const auto g = build_diagram(Family::A, 3);
  std::vector<WeightPair> bad;
  for (const auto& w : closed_form_weights(g)) bad.push_back({w.b, w.a});
  const TripleForm t(g, WeightAssignment(bad, edge_weights(g, bad)));
  const IntVector t110{1, 1, 0};
  EXPECT_NE(t.cubic(t110), 24);
}

TEST(Triple, DimensionMismatch) {
  const TripleForm t(build_diagram(Family::A, 3));
  const IntVector v{1, 1};
  try {
    t.cubic(v);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DimensionMismatch);
  }
}
