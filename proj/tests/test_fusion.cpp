#include <gtest/gtest.h>

#include "fusionring/fusion.hpp"
#include "test_util.hpp"

using namespace fusionring;
using namespace fusionring::test;

namespace {

FusionElement element(int k, std::initializer_list<std::pair<Weight, int>> terms) {
  FusionElement f;
  f.level = k;
  for (const auto& [w, c] : terms) f.terms[w] = c;
  return f;
}

}  // namespace

TEST(Fusion, ReduceExamples) {
  const auto& a1 = R("A1");
  for (int k = 1; k <= 5; ++k) {
    for (const auto& w : enumerate_alcove(a1, k))
      EXPECT_EQ(fusion_reduce(a1, irreducible(w), k), element(k, {{w, 1}}));
    EXPECT_TRUE(fusion_reduce(a1, irreducible(W({k + 1})), k).is_zero());
  }
  EXPECT_EQ(fusion_reduce(a1, irreducible(W({3})), 1), element(1, {{W({1}), -1}}));
  EXPECT_THROW(fusion_reduce(a1, irreducible(W({1})), 0), std::invalid_argument);
}

TEST(Fusion, ProductExamples) {
  const auto& a1 = R("A1");
  EXPECT_EQ(fusion_product(a1, W({0}), W({1}), 1), element(1, {{W({1}), 1}}));
  EXPECT_EQ(fusion_product(a1, W({1}), W({1}), 1), element(1, {{W({0}), 1}}));
  EXPECT_EQ(fusion_product(a1, W({1}), W({1}), 2), element(2, {{W({0}), 1}, {W({2}), 1}}));
  EXPECT_THROW(fusion_product(a1, W({3}), W({1}), 2), std::invalid_argument);
  const auto& a2 = R("A2");
  EXPECT_EQ(fusion_product(a2, W({1, 0}), W({1, 0}), 1), element(1, {{W({0, 1}), 1}}));
}

TEST(Fusion, VerlindeExamples) {
  const auto& a1 = R("A1");
  EXPECT_EQ(verlinde_fusion(a1, W({1}), W({1}), W({0}), 1), 1);
  const auto& a2 = R("A2");
  EXPECT_EQ(verlinde_fusion(a2, W({1, 0}), W({1, 0}), W({0, 1}), 1), 1);
  EXPECT_EQ(verlinde_fusion(a2, W({1, 0}), W({1, 0}), W({1, 0}), 1), 0);
  for (const char* t : {"A2", "G2", "B3"}) {
    const auto& rd = R(t);
    const auto al = enumerate_alcove(rd, 2);
    for (const auto& m : al)
      for (const auto& n : al) EXPECT_EQ(verlinde_fusion(rd, Weight{}, m, n, 2), m == n ? 1 : 0);
  }
}

TEST(Fusion, SMatrixIsUnitary) {
  for (const char* t : {"A1", "A2", "A3", "C2", "B3", "G2", "D4"})
    for (int k = 1; k <= 4; ++k) {
      const SMatrix s = s_matrix(R(t), k);
      EXPECT_LT(s.unitarity_residual(), 1e-9) << t << " " << k;
    }
}

TEST(Fusion, KacWaltonAgreesWithVerlinde) {
  for (const char* t : {"A1", "A2", "C2", "G2", "B3"})
    for (int k = 1; k <= 3; ++k) {
      const auto& rd = R(t);
      const SMatrix s = s_matrix(rd, k);
      EXPECT_EQ(verlinde_table(s, 1e-6), kac_walton_table(rd, k)) << t << " " << k;
    }
}

TEST(Fusion, RingAxioms) {
  for (const char* t : {"A2", "G2", "C3"}) {
    const auto& rd = R(t);
    const int k = 2;
    const auto al = enumerate_alcove(rd, k);
    const auto n = kac_walton_table(rd, k);
    const std::size_t m = al.size();
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b)
        for (std::size_t c = 0; c < m; ++c) {
          EXPECT_EQ(n[a][b][c], n[b][a][c]);
          EXPECT_GE(n[a][b][c], 0);
          for (std::size_t d = 0; d < m; ++d) {
            int64_t left = 0, right = 0;
            for (std::size_t e = 0; e < m; ++e) {
              left += n[a][b][e] * n[e][c][d];
              right += n[b][c][e] * n[a][e][d];
            }
            EXPECT_EQ(left, right);
          }
        }
  }
}

TEST(Fusion, ReductionIsAnAlgebraMap) {
  for (const char* t : {"A2", "B3", "G2"}) {
    const auto& rd = R(t);
    const int k = 2;
    const auto ws = enumerate_alcove(rd, k + 2);
    for (std::size_t i = 0; i < ws.size(); i += 2)
      for (std::size_t j = 0; j < ws.size(); j += 3) {
        const auto x = irreducible(ws[i]), y = irreducible(ws[j]);
        const auto direct = fusion_reduce(rd, tensor(rd, x, y), k);
        const auto lifted =
            fusion_reduce(rd, tensor(rd, lift(fusion_reduce(rd, x, k)), lift(fusion_reduce(rd, y, k))), k);
        EXPECT_EQ(direct, lifted) << t;
      }
  }
}

TEST(Fusion, FreeRankIsAlcoveSize) {
  const auto& b3 = R("B3");
  for (int k = 1; k <= 4; ++k) EXPECT_EQ(s_matrix(b3, k).alcove.size(), enumerate_alcove(b3, k).size());
}
