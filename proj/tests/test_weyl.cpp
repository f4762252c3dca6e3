#include <gtest/gtest.h>

#include <random>

#include "test_util.hpp"

using namespace fusionring;
using namespace fusionring::test;

namespace {

std::vector<Weight> box(int n, int lo, int hi) {
  std::vector<Weight> out{Weight{}};
  for (int i = 0; i < n; ++i) {
    std::vector<Weight> next;
    for (const auto& w : out)
      for (int c = lo; c <= hi; ++c) {
        Weight x = w;
        x[i] = c;
        next.push_back(x);
      }
    out = std::move(next);
  }
  return out;
}

Weight shifted_reflect(const RootDatum& rd, int i, const Weight& x) { return reflect(rd, i, x + rd.rho) - rd.rho; }

}  // namespace

TEST(Weyl, ReflectionsAreInvolutions) {
  for (const char* t : {"A3", "B3", "G2", "F4", "E6"}) {
    const auto& rd = R(t);
    for (const auto& x : box(std::min(rd.n, 4), -2, 2)) {
      for (int i = 0; i < rd.n; ++i) EXPECT_EQ(reflect(rd, i, reflect(rd, i, x)), x);
      EXPECT_EQ(affine_reflect(rd, 5, affine_reflect(rd, 5, x)), x);
    }
  }
}

TEST(Weyl, WordsActRightmostFirst) {
  const auto& rd = R("A2");
  const Weight x = W({2, -1});
  EXPECT_EQ(apply_word(rd, {0, 1}, x), reflect(rd, 0, reflect(rd, 1, x)));
  EXPECT_EQ(inverse_word({0, 1, 0, 2}), (WeylWord{2, 0, 1, 0}));
  EXPECT_EQ(word_to_string({1, 0}), "21");
  EXPECT_EQ(parse_word("21"), (WeylWord{1, 0}));
}

TEST(Weyl, StraightenExamples) {
  const auto& a1 = R("A1");
  const auto finite = ReflectionGroupSpec::finite();
  EXPECT_EQ(straighten(a1, W({3}), finite), (SignedWeight{W({3}), 1, 0}));
  EXPECT_EQ(straighten(a1, W({-1}), finite).sign, 0);
  const SignedWeight s = straighten(a1, W({3}), ReflectionGroupSpec::affine(3));
  EXPECT_EQ(s.weight, W({1}));
  EXPECT_EQ(s.sign, -1);
  const auto& a2 = R("A2");
  EXPECT_EQ(straighten(a2, W({2, 5}), finite).sign, 1);
  // s_1 . (0,0) = (-2, 1)
  const SignedWeight t = straighten(a2, W({-2, 1}), finite);
  EXPECT_EQ(t.weight, W({0, 0}));
  EXPECT_EQ(t.sign, -1);
}

TEST(Weyl, ConfluenceUnderRandomWallChoice) {
  std::mt19937 rng(12345);
  for (const char* t : {"A2", "B3", "C3", "G2", "F4"}) {
    const auto& rd = R(t);
    std::vector<ReflectionGroupSpec> groups{ReflectionGroupSpec::finite(), ReflectionGroupSpec::affine(rd.dual_coxeter + 3),
                                            ReflectionGroupSpec::parabolic(all_nodes(rd) & ~1u),
                                            ReflectionGroupSpec::finite(Shift::Zero)};
    for (const auto& x : box(std::min(rd.n, 3), -4, 6)) {
      for (const auto& g : groups) {
        const SignedWeight base = straighten(rd, x, g);
        for (int trial = 0; trial < 3; ++trial) {
          const SignedWeight r = straighten(rd, x, g, [&](const std::vector<int>& walls) {
            return walls[std::uniform_int_distribution<std::size_t>(0, walls.size() - 1)(rng)];
          });
          EXPECT_EQ(r.weight, base.weight) << t << " " << to_string(x, rd.n);
          EXPECT_EQ(r.sign, base.sign) << t << " " << to_string(x, rd.n);
          if (r.sign != 0) EXPECT_EQ(r.length % 2, base.length % 2);
        }
      }
    }
  }
}

TEST(Weyl, FixedPointsAreExactlyWalls) {
  for (const char* t : {"A3", "B3", "G2", "F4"}) {
    const auto& rd = R(t);
    std::vector<ReflectionGroupSpec> groups{ReflectionGroupSpec::finite(), ReflectionGroupSpec::affine(rd.dual_coxeter + 2),
                                            ReflectionGroupSpec::vertex_group(0, 3)};
    if (rd.type.family == Family::G) groups.back() = ReflectionGroupSpec::vertex_group(1, 4);
    for (const auto& x : box(std::min(rd.n, 4), -3, 4))
      for (const auto& g : groups) EXPECT_EQ(straighten(rd, x, g).sign == 0, on_wall(rd, x, g)) << t;
  }
}

TEST(Weyl, SignCoherence) {
  for (const char* t : {"A2", "B3", "G2"}) {
    const auto& rd = R(t);
    const auto g = ReflectionGroupSpec::finite();
    for (const auto& x : box(rd.n, -3, 3))
      for (int i = 0; i < rd.n; ++i) {
        const SignedWeight a = straighten(rd, x, g), b = straighten(rd, shifted_reflect(rd, i, x), g);
        EXPECT_EQ(a.sign, -b.sign);
        if (a.sign != 0) EXPECT_EQ(a.weight, b.weight);
      }
  }
}

TEST(Weyl, AlcoveExamples) {
  EXPECT_EQ(enumerate_alcove(R("A1"), 2), (std::vector<Weight>{W({0}), W({1}), W({2})}));
  EXPECT_EQ(enumerate_alcove(R("A2"), 1), (std::vector<Weight>{W({0, 0}), W({0, 1}), W({1, 0})}));
  // level(lambda_1) = 1 and level(lambda_2) = 2 for G2
  EXPECT_EQ(enumerate_alcove(R("G2"), 1), (std::vector<Weight>{W({0, 0}), W({1, 0})}));
  EXPECT_EQ(enumerate_alcove(R("G2"), 4).size(), 9u);
  EXPECT_EQ(enumerate_alcove(R("E8"), 2).size(), 3u);
  EXPECT_EQ(enumerate_alcove(R("A3"), 4).size(), 35u);
  EXPECT_EQ(dominant_weights_in_levels(R("A2"), 1, 2).size(), 3u);
}

TEST(Weyl, OrbitsAndDominantConjugates) {
  const auto& g2 = R("G2");
  EXPECT_EQ(orbit(g2, W({1, 0})).size(), 6u);
  EXPECT_EQ(orbit(g2, W({1, 1})).size(), 12u);
  const auto& e6 = R("E6");
  EXPECT_EQ(orbit(e6, W({1, 0, 0, 0, 0, 0})).size(), 27u);
  for (const auto& x : orbit(e6, W({0, 1, 0, 0, 0, 1}))) EXPECT_EQ(dominant_conjugate(e6, x), W({0, 1, 0, 0, 0, 1}));
}
