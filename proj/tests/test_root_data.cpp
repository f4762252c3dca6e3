#include <gtest/gtest.h>

#include "test_util.hpp"

using namespace fusionring;
using namespace fusionring::test;

TEST(RootData, A1Basics) {
  const auto& rd = R("A1");
  EXPECT_EQ(rd.cartan, (std::vector<std::vector<int>>{{2}}));
  EXPECT_EQ(rd.dual_coxeter, 2);
  EXPECT_EQ(rd.comarks, std::vector<int>{1});
  EXPECT_EQ(rd.theta, W({2}));
}

TEST(RootData, ComarkAtShiftNodes) {
  for (int n = 2; n <= 4; ++n) EXPECT_EQ(R("C" + std::to_string(n)).comarks[0], 1);
  EXPECT_EQ(R("G2").comarks, (std::vector<int>{1, 2}));
  EXPECT_EQ(R("F4").comarks, (std::vector<int>{2, 3, 2, 1}));
  EXPECT_EQ(R("E6").comarks, (std::vector<int>{1, 2, 2, 3, 2, 1}));
  EXPECT_EQ(R("E7").comarks, (std::vector<int>{2, 2, 3, 4, 3, 2, 1}));
  EXPECT_EQ(R("E8").comarks, (std::vector<int>{2, 3, 4, 6, 5, 4, 3, 2}));
}

struct Known {
  const char* type;
  int h;
  std::size_t positive;
  const char* order;
};

TEST(RootData, ClassicalInvariants) {
  const Known table[] = {
      {"A1", 2, 1, "2"},        {"A2", 3, 3, "6"},         {"A4", 5, 10, "120"},     {"B3", 5, 9, "48"},
      {"B4", 7, 16, "384"},     {"C2", 3, 4, "8"},         {"C3", 4, 9, "48"},       {"D4", 6, 12, "192"},
      {"D5", 8, 20, "1920"},    {"G2", 4, 6, "12"},        {"F4", 9, 24, "1152"},    {"E6", 12, 36, "51840"},
      {"E7", 18, 63, "2903040"}, {"E8", 30, 120, "696729600"},
  };
  for (const auto& t : table) {
    const auto& rd = R(t.type);
    EXPECT_EQ(rd.dual_coxeter, t.h) << t.type;
    EXPECT_EQ(rd.positive_roots.size(), t.positive) << t.type;
    EXPECT_EQ(weyl_group_order(rd, all_nodes(rd)).str(), t.order) << t.type;
    EXPECT_EQ(rd.level(rd.theta), 2) << t.type;
    EXPECT_TRUE(rd.is_dominant(rd.theta)) << t.type;
    EXPECT_EQ(rd.norm_scaled(rd.theta), 2 * rd.gram_scale) << t.type;
    for (const auto& a : rd.simple_roots) EXPECT_TRUE(rd.is_positive_root(a));
  }
}

TEST(RootData, HighestRoots) {
  EXPECT_EQ(R("A3").theta, W({1, 0, 1}));
  EXPECT_EQ(R("G2").theta, W({0, 1}));
  EXPECT_EQ(R("F4").theta, W({1, 0, 0, 0}));
  EXPECT_EQ(R("E6").theta, W({0, 1, 0, 0, 0, 0}));
  EXPECT_EQ(R("E7").theta, W({1, 0, 0, 0, 0, 0, 0}));
  EXPECT_EQ(R("E8").theta, W({0, 0, 0, 0, 0, 0, 0, 1}));
}

TEST(RootData, ParseErrors) {
  EXPECT_THROW(parse_lie_type("B2"), std::invalid_argument);
  EXPECT_THROW(parse_lie_type("D3"), std::invalid_argument);
  EXPECT_THROW(parse_lie_type("E9"), std::invalid_argument);
  EXPECT_THROW(parse_lie_type("F5"), std::invalid_argument);
  EXPECT_THROW(parse_lie_type("X2"), std::invalid_argument);
  EXPECT_THROW(parse_lie_type("A"), std::invalid_argument);
  EXPECT_EQ(to_string(parse_lie_type("E7")), "E7");
}

TEST(RootData, SymmetrizedGram) {
  for (const char* t : {"B3", "C3", "G2", "F4", "E6"}) {
    const auto& rd = R(t);
    for (int i = 0; i < rd.n; ++i)
      for (int j = 0; j < rd.n; ++j) {
        EXPECT_EQ(rd.ip_scaled(fundamental(i), fundamental(j)), rd.ip_scaled(fundamental(j), fundamental(i)));
        // <alpha_j, alpha_i^vee> from inner products
        const int64_t num = 2 * rd.ip_scaled(rd.simple_roots[j], rd.simple_roots[i]);
        const int64_t den = rd.norm_scaled(rd.simple_roots[i]);
        EXPECT_EQ(num % den, 0);
        EXPECT_EQ(num / den, rd.cartan[i][j]);
      }
  }
}

namespace {

void expect_automorphism(const RootDatum& rd, const DiagramMap& m, int i) {
  const auto a = affine_cartan(rd);
  ASSERT_EQ(m.perm.size(), static_cast<std::size_t>(rd.n + 1));
  EXPECT_EQ(m.perm[0], i);
  EXPECT_EQ(m.perm[i], 0);
  for (int x = 0; x <= rd.n; ++x) {
    EXPECT_EQ(m.perm[m.perm[x]], x);
    for (int y = 0; y <= rd.n; ++y) EXPECT_EQ(a[m.perm[x]][m.perm[y]], a[x][y]);
  }
  std::vector<Weight> roots{-rd.theta};
  for (const auto& r : rd.simple_roots) roots.push_back(r);
  for (int j = 1; j <= rd.n; ++j) EXPECT_EQ(m.apply(roots[j]), roots[m.perm[j]]);
}

}  // namespace

TEST(RootData, AffineAutomorphisms) {
  const auto& a2 = R("A2");
  auto m = affine_automorphism_swapping(a2, 1);
  ASSERT_TRUE(m);
  expect_automorphism(a2, *m, 1);
  EXPECT_EQ(m->perm[2], 2);

  const auto& e7 = R("E7");
  m = affine_automorphism_swapping(e7, 7);
  ASSERT_TRUE(m);
  expect_automorphism(e7, *m, 7);

  const auto& e6 = R("E6");
  m = affine_automorphism_swapping(e6, 1);
  ASSERT_TRUE(m);
  expect_automorphism(e6, *m, 1);

  for (const char* t : {"B4", "D5"}) {
    const auto& rd = R(t);
    m = affine_automorphism_swapping(rd, 1);
    ASSERT_TRUE(m) << t;
    expect_automorphism(rd, *m, 1);
  }

  // the affine C_n symmetry exchanges 0 with n, not with 1
  EXPECT_FALSE(affine_automorphism_swapping(R("C3"), 1));
  EXPECT_FALSE(affine_automorphism_swapping(R("F4"), 1));
  EXPECT_FALSE(affine_automorphism_swapping(R("G2"), 2));
  EXPECT_FALSE(affine_automorphism_swapping(R("E8"), 8));
}

TEST(RootData, JsonCarriesSchema) {
  const std::string j = root_datum_json(R("G2"));
  EXPECT_NE(j.find("\"schema\""), std::string::npos);
  EXPECT_EQ(j, root_datum_json(R("G2")));
}
