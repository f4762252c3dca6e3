#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "fusionring/weyl.hpp"

namespace fusionring {

// Which closed chamber the keys of a VirtualCharacter live in.
//   G       dominant weights (R[G])
//   Edge    C_e: nonnegative on every node except the vertex (R[Z_e])
//   Vertex  C_v at level k (R_k[Z_v])
enum class Chamber { G, Edge, Vertex };

struct VirtualCharacter {
  Chamber chamber = Chamber::G;
  std::map<Weight, Integer> terms;  // zero coefficients never stored

  void add(const Weight& w, const Integer& c);
  bool is_zero() const { return terms.empty(); }
  std::size_t size() const { return terms.size(); }
  VirtualCharacter& operator+=(const VirtualCharacter& o);
  VirtualCharacter& operator-=(const VirtualCharacter& o);
  VirtualCharacter& operator*=(const Integer& s);
  friend bool operator==(const VirtualCharacter&, const VirtualCharacter&) = default;
};

VirtualCharacter operator+(VirtualCharacter a, const VirtualCharacter& b);
VirtualCharacter operator-(VirtualCharacter a, const VirtualCharacter& b);
VirtualCharacter operator*(const Integer& s, VirtualCharacter a);

VirtualCharacter irreducible(const Weight& w, Chamber c = Chamber::G);

struct WeightSum {
  std::map<Weight, Integer> terms;
  void add(const Weight& w, const Integer& c);
  friend bool operator==(const WeightSum&, const WeightSum&) = default;
};

struct CapacityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Weight multiplicities of an irreducible, computed by Freudenthal's formula
// on dominant weights only; orbits are reconstructed by the Weyl action.
struct WeightSystem {
  Weight highest;
  std::vector<std::pair<Weight, Integer>> dominant;  // highest first
  std::vector<std::pair<Weight, Integer>> all;       // every weight with its multiplicity
  Integer dimension;
};

// Memoized per (type, highest weight); safe for concurrent callers.
const WeightSystem& weight_system(const RootDatum& rd, const Weight& lambda);
WeightSum weight_system_sum(const RootDatum& rd, const Weight& lambda);

// Weyl dimension formula, exact.
Integer weyl_dimension(const RootDatum& rd, const Weight& lambda);
Integer dimension(const RootDatum& rd, const VirtualCharacter& x);

// Brauer-Klimyk over the factor with the smaller dimension.
VirtualCharacter tensor_irreducibles(const RootDatum& rd, const Weight& lambda, const Weight& mu);
VirtualCharacter tensor(const RootDatum& rd, const VirtualCharacter& x, const VirtualCharacter& y);

struct AntisymmetrizeOptions {
  // Finite groups above this order are refused with CapacityError.
  uint64_t max_group_order = 51840;
  // Required for affine groups: keep orbit points with scaled norm at most
  // this bound (reached through points inside the bound).
  std::optional<int64_t> norm_bound;
};

// sum over u in g of sign(u) e^{u.lambda}, where u.lambda is the action shifted
// by the spec's shift (Shift::Zero gives the plain action).
WeightSum antisymmetrize(const RootDatum& rd, const Weight& lambda, const ReflectionGroupSpec& g,
                         const AntisymmetrizeOptions& opt = {});

// [lambda]_e -> sign [mu] with (mu, sign) the finite rho-shifted straightening.
VirtualCharacter induct_to_G(const RootDatum& rd, const VirtualCharacter& x);

// Terms sorted by the canonical weight order (level, then lex).
std::vector<std::pair<Weight, Integer>> canonical_terms(const RootDatum& rd, const VirtualCharacter& x);
// Copy with sign flipped if needed so that the canonically largest term is positive.
VirtualCharacter sign_normalized(const RootDatum& rd, VirtualCharacter x);
// Total order on virtual characters used for multiset comparison.
bool character_less(const RootDatum& rd, const VirtualCharacter& a, const VirtualCharacter& b);
std::string to_string(const RootDatum& rd, const VirtualCharacter& x);

}  // namespace fusionring
