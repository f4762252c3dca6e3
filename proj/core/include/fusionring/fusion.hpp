#pragma once

#include <complex>
#include <map>
#include <vector>

#include "fusionring/character.hpp"

namespace fusionring {

struct FusionElement {
  int level = 0;
  std::map<Weight, Integer> terms;  // keys in the level-k alcove
  bool is_zero() const { return terms.empty(); }
  friend bool operator==(const FusionElement&, const FusionElement&) = default;
};

// Kac-Walton: each [lambda] goes to sign [a.lambda] under the rho-shifted
// affine Weyl group at level k + h^vee; singular terms vanish.
FusionElement fusion_reduce(const RootDatum& rd, const VirtualCharacter& x, int k);
FusionElement fusion_product(const RootDatum& rd, const Weight& lambda, const Weight& mu, int k);
// Lifts an alcove-supported element back to R[G].
VirtualCharacter lift(const FusionElement& x);

struct SMatrix {
  int level = 0;
  std::vector<Weight> alcove;  // enumerate_alcove order
  std::vector<std::vector<std::complex<double>>> s;
  double unitarity_residual() const;
  double symmetry_residual() const;
};

struct VerlindeOptions {
  uint64_t max_group_order = 51840;
  double tolerance = 1e-6;
};

struct OracleFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// S-matrix from the alternating W-sum of exponentials at the shifted alcove
// points, normalized so that row 0 is real and positive. Throws CapacityError
// when |W| exceeds the bound.
SMatrix s_matrix(const RootDatum& rd, int k, const VerlindeOptions& opt = {});

// Full table N[a][b][c] = N_{ab}^c over alcove indices, by the Verlinde
// formula. Throws OracleFailure if any value is not within tolerance of an
// integer. `max_residual` receives the largest distance to an integer seen.
std::vector<std::vector<std::vector<int64_t>>> verlinde_table(const SMatrix& s, double tolerance,
                                                              double* max_residual = nullptr);
int64_t verlinde_fusion(const RootDatum& rd, const Weight& lambda, const Weight& mu, const Weight& nu, int k,
                        const VerlindeOptions& opt = {});

// Kac-Walton table with the same indexing as verlinde_table.
std::vector<std::vector<std::vector<int64_t>>> kac_walton_table(const RootDatum& rd, int k);

}  // namespace fusionring
