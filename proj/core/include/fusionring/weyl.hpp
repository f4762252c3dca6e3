#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "fusionring/root_data.hpp"

namespace fusionring {

// Word in simple reflections, 0-based node indices. The word {i1, i2, ..., im}
// denotes w_{i1} w_{i2} ... w_{im}; it acts on weights rightmost letter first.
using WeylWord = std::vector<int>;

// 1-based digits as in the usual listings, e.g. {1, 0} -> "21"; identity -> "1".
std::string word_to_string(const WeylWord& w);
// Inverse of word_to_string for ranks below 10.
WeylWord parse_word(const std::string& s);

struct SignedWeight {
  Weight weight;
  int sign = 1;    // -1, 0 or +1
  int length = 0;  // number of reflections applied
  bool parity() const { return (length & 1) != 0; }
  friend bool operator==(const SignedWeight&, const SignedWeight&) = default;
};

enum class GroupKind { FiniteW, FiniteParabolic, AffineLevel, VertexGroup };
enum class Shift { Zero, Rho };

// A reflection group acting on weights, optionally through the shifted action
// lambda -> w(lambda + shift) - shift.
//   FiniteW          walls x_i = 0 for every node
//   FiniteParabolic  walls x_i = 0 for i in node_mask
//   AffineLevel(m)   all finite walls plus level(x) = m
//   VertexGroup(v,k) walls x_j = 0 for j != v plus the affine wall; with the
//                    rho_v shift this is the level-(k+1) wall, realized here
//                    in the rho-shifted frame as level(x) = k + h^vee.
struct ReflectionGroupSpec {
  GroupKind kind = GroupKind::FiniteW;
  Shift shift = Shift::Rho;
  uint32_t node_mask = 0;
  int level_m = 0;
  int vertex = -1;
  int k = 0;

  static ReflectionGroupSpec finite(Shift s = Shift::Rho) { return {GroupKind::FiniteW, s, 0, 0, -1, 0}; }
  static ReflectionGroupSpec parabolic(uint32_t mask, Shift s = Shift::Rho) {
    return {GroupKind::FiniteParabolic, s, mask, 0, -1, 0};
  }
  static ReflectionGroupSpec affine(int m, Shift s = Shift::Rho) {
    return {GroupKind::AffineLevel, s, 0, m, -1, 0};
  }
  static ReflectionGroupSpec vertex_group(int v, int k) {
    return {GroupKind::VertexGroup, Shift::Rho, 0, 0, v, k};
  }
};

Weight reflect(const RootDatum& rd, int i, Weight x);
// lambda - (level(lambda) - m) theta.
Weight affine_reflect(const RootDatum& rd, int m, Weight x);
Weight apply_word(const RootDatum& rd, const WeylWord& w, Weight x);
WeylWord inverse_word(const WeylWord& w);

// Policy hook used by the confluence tests: given the indices of violated
// walls (node index, or -1 for the affine wall), pick one. Default: first.
using WallChooser = std::function<int(const std::vector<int>&)>;

// Moves lambda into the closed fundamental domain of g. The returned weight
// is always the chamber representative (minus the shift); sign is 0 exactly
// when the shifted point lies on a wall of g. Throws std::logic_error if the
// termination potential fails to decrease.
SignedWeight straighten(const RootDatum& rd, const Weight& lambda, const ReflectionGroupSpec& g,
                        const WallChooser& choose = {});

// True iff lambda + shift lies on some reflecting wall of g (direct test).
bool on_wall(const RootDatum& rd, const Weight& lambda, const ReflectionGroupSpec& g);

// Unshifted dominant representative of the W-orbit.
Weight dominant_conjugate(const RootDatum& rd, Weight x);

// W-orbit of a dominant weight, dominant weight first.
std::vector<Weight> orbit(const RootDatum& rd, const Weight& dominant);

// Canonical weight order: level first, then lexicographic coordinates.
bool canonical_less(const RootDatum& rd, const Weight& a, const Weight& b);

// Dominant weights of level <= k in canonical order.
std::vector<Weight> enumerate_alcove(const RootDatum& rd, int k);
// Dominant weights with lo < level <= hi in canonical order.
std::vector<Weight> dominant_weights_in_levels(const RootDatum& rd, int lo, int hi);

}  // namespace fusionring
