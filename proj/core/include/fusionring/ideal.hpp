#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fusionring/character.hpp"
#include "fusionring/steinberg.hpp"

namespace fusionring {

enum class KernelClass { Singular, Paired, CentralPaired, OrthogonalPaired, ProjectedSingular };
std::string to_string(KernelClass c);

// One generator of ker d^{e,v}, written over C_e. Central-paired elements
// carry an extra product term coeff * [product_character] * [product_theta]_e
// with product_character a G-dominant weight.
struct KernelElement {
  KernelClass kind = KernelClass::Singular;
  Weight source;
  std::optional<Weight> partner;
  int sign = 0;  // sign of the straightening that produced the partner
  VirtualCharacter plain;
  bool has_product = false;
  Integer product_coeff = 0;
  Weight product_character;
  Weight product_theta;
};

struct KernelGenerators {
  int vertex = 0;
  int level = 0;
  Weight theta_v;  // the single AB_v weight for central vertices
  std::vector<KernelElement> elements;
  // Orthogonal-edge statistics: |B_s|, basis weights at level k+1, pairs
  // whose both ends are basis weights (emitted once), emitted pairs.
  std::size_t projected_count = 0;
  std::size_t singular_count = 0;
  std::size_t reflecting_count = 0;
  std::size_t pair_count = 0;
  std::size_t count(KernelClass c) const;
};

struct ClosureViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

KernelGenerators kernel_induction_closed(const RootDatum& rd, const AffineSteinbergBasis& ab);
KernelGenerators kernel_central_vertex(const RootDatum& rd, const AffineSteinbergBasis& ab);
// `basis` is the Z_e basis to use (AB_e, or the shifted Steinberg basis at
// twisted levels).
KernelGenerators kernel_orthogonal_edge(const RootDatum& rd, int v, const std::vector<Weight>& basis, int k);

// Image of a kernel element under d^{e,v} (term-wise vertex-group
// straightening; product terms through the module action on [theta]_v).
VirtualCharacter vertex_image(const RootDatum& rd, const KernelElement& e, int v, int k);

// Kernel element pushed to R[G].
VirtualCharacter induct_kernel_element(const RootDatum& rd, const KernelElement& e);

enum class Provenance { Derived, Table };

struct GeneratorSet {
  LieType type;
  int level = 0;
  Provenance provenance = Provenance::Derived;
  std::string source_tag;
  bool golden = true;
  std::vector<VirtualCharacter> generators;
};

struct DerivationTrace {
  AffineSteinbergBasis basis;
  KernelGenerators kernel;
  std::string kernel_routine;
};

// Vertex choice, affine Steinberg basis, kernel, induction to R[G], sign
// normalization and de-duplication.
GeneratorSet derive_fusion_ideal(const RootDatum& rd, int k, DerivationTrace* trace = nullptr);

// Minimum level for which the tabulated exceptional lists are valid
// (inclusive); 1 for the classical families.
int tabulated_min_level(LieType t);

// The closed-form generator lists: classical families from their row
// formulas, exceptional types from the embedded tables. Below the minimum
// level this throws UnsupportedCase unless `experimental` is set, in which
// case offending terms are straightened and the set is marked non-golden.
GeneratorSet tabulated_generators(const RootDatum& rd, int k, bool experimental = false);

// Raw table strings for an exceptional type at the parity of k (empty for
// classical families).
std::vector<std::string> table_rows(LieType t, int k);

// Z-basis of I_k restricted to levels <= L: [lambda] for singular lambda and
// [lambda] + (-1)^{|a|+1} [a.lambda] otherwise, for dominant lambda with
// k < level <= L.
std::vector<VirtualCharacter> classical_ideal_truncation(const RootDatum& rd, int k, int L);

// Sign-normalized copies sorted by character_less (multiset canonical form).
std::vector<VirtualCharacter> canonical_multiset(const RootDatum& rd, const std::vector<VirtualCharacter>& xs);

}  // namespace fusionring
