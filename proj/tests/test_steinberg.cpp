#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <set>

#include "fusionring/verify.hpp"
#include "test_util.hpp"

using namespace fusionring;
using namespace fusionring::test;

namespace {

std::set<Weight> as_set(const std::vector<Weight>& v) { return {v.begin(), v.end()}; }

std::vector<Weight> edge_minus_vertex(const AffineSteinbergBasis& ab) {
  std::vector<Weight> out;
  for (const auto& w : ab.ab_e)
    if (std::find(ab.ab_v.begin(), ab.ab_v.end(), w) == ab.ab_v.end()) out.push_back(w);
  return out;
}

// Printed words and ours agree as a level-preserving bijection: each printed
// word is reduced, names one of our elements of the same length, and carries
// the same lambda_w.
void expect_printed_list(const std::string& type, int vertex, const std::string& file) {
  const auto& rd = R(type);
  const auto sb = steinberg_basis(rd, complement_of(rd, vertex));
  const auto printed = printed_words(file);
  ASSERT_EQ(sb.entries.size(), printed.size()) << type;
  std::map<Weight, std::size_t> by_element;
  for (std::size_t i = 0; i < sb.entries.size(); ++i) by_element[apply_word(rd, sb.entries[i].word, rd.rho)] = i;
  std::set<std::size_t> used;
  for (std::size_t i = 0; i < printed.size(); ++i) {
    const auto& p = printed[i];
    EXPECT_EQ(p.word.size(), sb.entries[i].word.size()) << type << " entry " << i + 1;
    const auto it = by_element.find(apply_word(rd, p.word, rd.rho));
    ASSERT_NE(it, by_element.end()) << type << " entry " << i + 1 << " is not a coset representative";
    const auto& e = sb.entries[it->second];
    EXPECT_TRUE(used.insert(it->second).second) << type << " entry " << i + 1;
    EXPECT_EQ(e.word.size(), p.word.size()) << type << " entry " << i + 1 << " is not reduced";
    EXPECT_EQ(e.positive_weight, p.lambda_w) << type << " entry " << i + 1;
    EXPECT_EQ(e.basis_weight, apply_word(rd, inverse_word(p.word), p.lambda_w)) << type << " entry " << i + 1;
  }
}

}  // namespace

TEST(Steinberg, PositiveWeylGroupCounts) {
  EXPECT_EQ(positive_weyl_group(R("G2"), complement_of(R("G2"), 1)).size(), 6u);
  EXPECT_EQ(positive_weyl_group(R("F4"), complement_of(R("F4"), 0)).size(), 24u);
  EXPECT_EQ(positive_weyl_group(R("E6"), complement_of(R("E6"), 0)).size(), 27u);
  EXPECT_EQ(positive_weyl_group(R("E7"), complement_of(R("E7"), 6)).size(), 56u);
  EXPECT_EQ(positive_weyl_group(R("E8"), complement_of(R("E8"), 7)).size(), 240u);
}

TEST(Steinberg, G2WordList) {
  const auto& rd = R("G2");
  const auto words = positive_weyl_group(rd, complement_of(rd, 1));
  EXPECT_EQ(words, (std::vector<WeylWord>{{}, {1}, {0, 1}, {1, 0, 1}, {0, 1, 0, 1}, {1, 0, 1, 0, 1}}));
  expect_printed_list("G2", 1, "steinberg_G2.txt");
}

TEST(Steinberg, PrintedListsF4E6E7) {
  expect_printed_list("F4", 0, "steinberg_F4.txt");
  expect_printed_list("E6", 0, "steinberg_E6.txt");
  expect_printed_list("E7", 6, "steinberg_E7.txt");
}

TEST(Steinberg, BasisInvariants) {
  for (const char* t : {"A3", "B3", "C3", "D4", "G2", "F4", "E6"}) {
    const auto& rd = R(t);
    const auto r = verify_steinberg(rd);
    EXPECT_EQ(r.status, Status::Pass) << t << (r.counterexamples.empty() ? "" : r.counterexamples.front());
  }
  const auto& f4 = R("F4");
  const auto sb = steinberg_basis(f4, complement_of(f4, 0));
  EXPECT_EQ(sb.entries[0].positive_weight, Weight{});
  EXPECT_EQ(sb.entries[0].basis_weight, Weight{});
  EXPECT_EQ(sb.entries[1].word, WeylWord{0});
  EXPECT_EQ(sb.entries[1].positive_weight, W({1, 0, 0, 0}));
  EXPECT_EQ(sb.entries[1].basis_weight, reflect(f4, 0, W({1, 0, 0, 0})));
}

TEST(Steinberg, AffineTypeA) {
  const auto& rd = R("A2");
  for (int k = 1; k <= 5; ++k) {
    const auto ab = affine_steinberg_basis(rd, 0, k);
    EXPECT_EQ(as_set(ab.ab_e), as_set({W({k, 0}), W({k, 1}), W({k + 1, 0})}));
    EXPECT_EQ(ab.ab_v, std::vector<Weight>{W({k, 0})});
  }
}

TEST(Steinberg, AffineG2) {
  const auto& rd = R("G2");
  for (int k = 2; k <= 8; k += 2) {
    const auto ab = affine_steinberg_basis(rd, 1, k);
    const int l = k / 2;
    EXPECT_EQ(as_set(edge_minus_vertex(ab)), as_set({W({3, l - 1}), W({1, l}), W({0, l + 1})})) << k;
  }
  for (int k = 3; k <= 9; k += 2) {
    const auto ab = affine_steinberg_basis(rd, 1, k);
    EXPECT_EQ(ab.transform, AffineTransform::ShiftOnly);
    EXPECT_EQ(as_set(ab.ab_v), as_set({W({3, (k - 3) / 2}), W({1, (k - 1) / 2}), W({0, (k - 1) / 2})})) << k;
  }
}

TEST(Steinberg, AffineF4Lists) {
  const auto& rd = R("F4");
  for (int k = 6; k <= 12; k += 2) {
    const auto ab = affine_steinberg_basis(rd, 0, k);
    const auto expect = symbolic_weights("ab_even_F4.txt", k);
    EXPECT_EQ(ab.ab_e.size(), expect.size());
    EXPECT_EQ(as_set(ab.ab_e), as_set(expect)) << k;
  }
  for (int k = 7; k <= 13; k += 2) {
    const auto ab = affine_steinberg_basis(rd, 0, k);
    EXPECT_TRUE(ab.edge_only);
    EXPECT_EQ(as_set(ab.ab_e), as_set(symbolic_weights("ab_odd_F4.txt", k))) << k;
  }
}

TEST(Steinberg, AffineE6E7Complements) {
  for (int k = 2; k <= 5; ++k) {
    const auto ab = affine_steinberg_basis(R("E6"), 0, k);
    EXPECT_EQ(ab.ab_v, std::vector<Weight>{W({k, 0, 0, 0, 0, 0})});
    EXPECT_EQ(as_set(edge_minus_vertex(ab)), as_set(symbolic_weights("ab_complement_E6.txt", k))) << k;
  }
  for (int k = 4; k <= 6; ++k) {
    const auto ab = affine_steinberg_basis(R("E7"), 6, k);
    EXPECT_EQ(ab.ab_v, std::vector<Weight>{W({0, 0, 0, 0, 0, 0, k})});
    EXPECT_EQ(as_set(edge_minus_vertex(ab)), as_set(symbolic_weights("ab_complement_E7.txt", k))) << k;
  }
}

TEST(Steinberg, AffineBasisCardinalities) {
  const std::pair<const char*, std::size_t> cases[] = {{"A4", 5}, {"B4", 8}, {"C3", 6}, {"D5", 10}, {"E8", 240}};
  for (const auto& [t, n] : cases) {
    const auto& rd = R(t);
    const auto ab = affine_steinberg_basis(rd, default_vertex(rd.type), 4);
    EXPECT_EQ(ab.ab_e.size(), n) << t;
    EXPECT_EQ(as_set(ab.ab_e).size(), n) << t;
    for (const auto& w : ab.ab_v) EXPECT_TRUE(in_vertex_chamber(rd, ab.vertex, 4, w)) << t;
  }
}

TEST(Steinberg, UnsupportedCases) {
  EXPECT_THROW(affine_steinberg_basis(R("A2"), 0, 0), UnsupportedCase);
  EXPECT_THROW(affine_steinberg_basis(R("F4"), 3, 6), UnsupportedCase);
  EXPECT_THROW(affine_steinberg_basis(R("E7"), 0, 5), UnsupportedCase);
}
