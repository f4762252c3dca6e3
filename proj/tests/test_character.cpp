#include <gtest/gtest.h>

#include "test_util.hpp"

using namespace fusionring;
using namespace fusionring::test;

namespace {

std::vector<Weight> small_dominant(const RootDatum& rd, int max_level) { return enumerate_alcove(rd, max_level); }

Integer total(const WeightSystem& ws) {
  Integer s = 0;
  for (const auto& [w, m] : ws.all) s += m;
  return s;
}

}  // namespace

TEST(Character, WeightSystemExamples) {
  const auto& a1 = R("A1");
  EXPECT_EQ(weight_system_sum(a1, W({2})).terms,
            (std::map<Weight, Integer>{{W({-2}), 1}, {W({0}), 1}, {W({2}), 1}}));
  for (const char* t : {"A3", "G2", "E8"}) {
    const auto& rd = R(t);
    const auto s = weight_system_sum(rd, Weight{});
    EXPECT_EQ(s.terms, (std::map<Weight, Integer>{{Weight{}, 1}}));
  }
  const auto& g2 = weight_system(R("G2"), W({1, 0}));
  EXPECT_EQ(g2.all.size(), 7u);
  for (const auto& [w, m] : g2.all) EXPECT_EQ(m, 1);
  EXPECT_EQ(g2.dimension, 7);
}

TEST(Character, FreudenthalMatchesWeylDimension) {
  const std::pair<const char*, int> cases[] = {{"A3", 4}, {"B3", 3}, {"C3", 3}, {"D4", 3}, {"G2", 5},
                                               {"F4", 3}, {"E6", 2}, {"E7", 2}, {"E8", 2}};
  for (const auto& [t, lvl] : cases) {
    const auto& rd = R(t);
    for (const auto& w : small_dominant(rd, lvl)) {
      const auto& ws = weight_system(rd, w);
      EXPECT_EQ(total(ws), weyl_dimension(rd, w)) << t << " " << to_string(w, rd.n);
      EXPECT_EQ(ws.dimension, weyl_dimension(rd, w));
    }
  }
  EXPECT_EQ(weyl_dimension(R("E8"), W({0, 0, 0, 0, 0, 0, 0, 1})), 248);
  EXPECT_EQ(weyl_dimension(R("E7"), W({0, 0, 0, 0, 0, 0, 1})), 56);
  EXPECT_EQ(weyl_dimension(R("F4"), W({0, 0, 0, 1})), 26);
}

TEST(Character, TensorExamples) {
  const auto& a1 = R("A1");
  VirtualCharacter x = irreducible(W({3}));
  x.add(W({1}), -2);
  EXPECT_EQ(tensor(a1, irreducible(Weight{}), x), x);
  VirtualCharacter expect = irreducible(W({0}));
  expect.add(W({2}), 1);
  EXPECT_EQ(tensor_irreducibles(a1, W({1}), W({1})), expect);
  const auto& e6 = R("E6");
  const auto p = tensor_irreducibles(e6, W({1, 0, 0, 0, 0, 0}), W({1, 0, 0, 0, 0, 0}));
  EXPECT_EQ(dimension(e6, p), 27 * 27);
  for (const auto& [w, c] : p.terms) EXPECT_GT(c, 0);
}

TEST(Character, TensorIsCommutativeAssociativeAndMultiplicative) {
  for (const char* t : {"A2", "C2", "G2", "B3"}) {
    const auto& rd = R(t);
    const auto ws = small_dominant(rd, 2);
    for (const auto& a : ws)
      for (const auto& b : ws) {
        const auto ab = tensor_irreducibles(rd, a, b);
        EXPECT_EQ(ab, tensor_irreducibles(rd, b, a));
        EXPECT_EQ(dimension(rd, ab), weyl_dimension(rd, a) * weyl_dimension(rd, b));
        for (const auto& c : ws) {
          if (rd.level(c) > 1) continue;
          EXPECT_EQ(tensor(rd, ab, irreducible(c)), tensor(rd, irreducible(a), tensor_irreducibles(rd, b, c)));
        }
      }
  }
}

TEST(Character, AntisymmetrizeExamples) {
  const auto& a1 = R("A1");
  const auto zero = ReflectionGroupSpec::finite(Shift::Zero);
  EXPECT_EQ(antisymmetrize(a1, W({1}), zero).terms, (std::map<Weight, Integer>{{W({1}), 1}, {W({-1}), -1}}));
  EXPECT_TRUE(antisymmetrize(a1, W({0}), zero).terms.empty());
  const auto& a2 = R("A2");
  const auto r = antisymmetrize(a2, a2.rho, zero);
  EXPECT_EQ(r.terms.size(), 6u);
  int plus = 0;
  for (const auto& [w, c] : r.terms) plus += c == 1;
  EXPECT_EQ(plus, 3);
  EXPECT_TRUE(antisymmetrize(a2, W({1, 0}), ReflectionGroupSpec::parabolic(2u, Shift::Zero)).terms.empty());
  EXPECT_THROW(antisymmetrize(R("E7"), R("E7").rho, zero), CapacityError);
  EXPECT_THROW(antisymmetrize(a2, a2.rho, ReflectionGroupSpec::affine(4, Shift::Zero)), std::invalid_argument);
}

// A_{lambda+rho} = sign * A_{mu+rho} with (mu, sign) the straightening of lambda.
TEST(Character, InductionMatchesAntisymmetrizationRatio) {
  const auto zero = ReflectionGroupSpec::finite(Shift::Zero);
  for (const char* t : {"A2", "G2"}) {
    const auto& rd = R(t);
    for (int a = -3; a <= 3; ++a)
      for (int b = -3; b <= 3; ++b) {
        const Weight x = W({a, b});
        const VirtualCharacter g = induct_to_G(rd, irreducible(x, Chamber::Edge));
        const WeightSum lhs = antisymmetrize(rd, x + rd.rho, zero);
        WeightSum rhs;
        for (const auto& [mu, c] : g.terms)
          for (const auto& [w, s] : antisymmetrize(rd, mu + rd.rho, zero).terms) rhs.add(w, c * s);
        EXPECT_EQ(lhs, rhs) << t << " " << to_string(x, rd.n);
      }
  }
}

TEST(Character, InductionExamples) {
  const auto& b3 = R("B3");
  EXPECT_EQ(induct_to_G(b3, irreducible(W({2, 0, 1}), Chamber::Edge)).terms, irreducible(W({2, 0, 1})).terms);
  EXPECT_TRUE(induct_to_G(b3, irreducible(W({-1, 3, 0}), Chamber::Edge)).is_zero());
}

TEST(Character, SignNormalization) {
  const auto& a2 = R("A2");
  VirtualCharacter x = irreducible(W({0, 0}));
  x.add(W({2, 1}), -1);
  const auto y = sign_normalized(a2, x);
  EXPECT_EQ(y.terms.at(W({2, 1})), 1);
  EXPECT_EQ(y.terms.at(W({0, 0})), -1);
  EXPECT_EQ(sign_normalized(a2, y), y);
}
