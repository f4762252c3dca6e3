#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fusionring/weight.hpp"

namespace fusionring {

enum class Family { A, B, C, D, E, F, G };

struct LieType {
  Family family = Family::A;
  int rank = 1;
  friend bool operator==(const LieType&, const LieType&) = default;
};

// Parses "A5", "e8", "G2". Throws std::invalid_argument on bad input.
LieType parse_lie_type(std::string_view code);
std::string to_string(LieType t);
char family_letter(Family f);
// Throws std::invalid_argument with a diagnostic if the rank is out of range.
void validate(LieType t);

// Static data of a simple root system, Bourbaki numbering, 0-based nodes.
// cartan[i][j] = <alpha_j, alpha_i^vee>, so simple_roots[j] (fundamental
// coordinates) is column j of the Cartan matrix.
struct RootDatum {
  LieType type;
  int n = 0;
  std::vector<std::vector<int>> cartan;
  std::vector<int> symmetrizer;  // (alpha_i, alpha_i)/2 scaled to integers, short roots smallest
  std::vector<int> marks;        // theta = sum marks_i alpha_i
  std::vector<int> comarks;      // theta^vee = sum comarks_i alpha_i^vee
  int dual_coxeter = 0;
  Weight theta;
  Weight rho;
  std::vector<Weight> simple_roots;
  // Positive roots in fundamental coordinates, sorted by height then lex;
  // positive_root_coords holds the same roots in the simple-root basis.
  std::vector<Weight> positive_roots;
  std::vector<std::vector<int>> positive_root_coords;

  // Scaled inner product: (x, y) = ip_scaled(x, y) / gram_scale, normalized
  // so long roots have (alpha, alpha) = 2.
  std::vector<std::vector<int64_t>> gram_scaled;
  int64_t gram_scale = 1;
  // height_scaled(x) = cartan_det * <x, rho^vee>, an integer.
  std::vector<int64_t> height_row;
  int64_t cartan_det = 1;

  int level(const Weight& w) const {
    int s = 0;
    for (int i = 0; i < n; ++i) s += comarks[i] * w[i];
    return s;
  }
  int64_t ip_scaled(const Weight& x, const Weight& y) const;
  int64_t norm_scaled(const Weight& x) const { return ip_scaled(x, x); }
  int64_t height_scaled(const Weight& x) const;
  double ip(const Weight& x, const Weight& y) const {
    return static_cast<double>(ip_scaled(x, y)) / static_cast<double>(gram_scale);
  }
  // Simple-root coordinates of an element of the root lattice; throws if
  // the input is not in the root lattice.
  std::vector<int> to_root_coords(const Weight& x) const;
  // True iff x is a positive root (x must be a root).
  bool is_positive_root(const Weight& x) const { return height_scaled(x) > 0; }
  bool is_root(const Weight& x) const;
  bool is_dominant(const Weight& x) const {
    for (int i = 0; i < n; ++i)
      if (x[i] < 0) return false;
    return true;
  }
  std::string name() const { return to_string(type); }
};

// Builds the datum from family rules. Throws std::invalid_argument if t is
// out of range.
RootDatum build_root_datum(LieType t);
// Process-wide immutable cache of build_root_datum.
const RootDatum& root_datum(LieType t);

// Order of the Weyl group of the sub-diagram on `nodes` (all nodes if empty
// mask means the trivial group). Uses |W| = r! * prod(marks) * det(C) per
// connected component.
Integer weyl_group_order(const RootDatum& rd, uint32_t node_mask);
inline uint32_t all_nodes(const RootDatum& rd) { return (1u << rd.n) - 1u; }

// An automorphism of the affine Dynkin diagram (nodes 0..n, node 0 the
// affine node) together with the induced linear map on weights, which sends
// alpha_j to alpha_{perm[j]} with alpha_0 = -theta.
struct DiagramMap {
  std::vector<int> perm;                // size n+1
  std::vector<std::vector<int>> matrix; // n x n, acts on fundamental coordinates
  Weight apply(const Weight& x) const;
};

// Affine Cartan matrix with alpha_0 = -theta: entry [i][j] = <alpha_j, alpha_i^vee>.
std::vector<std::vector<int>> affine_cartan(const RootDatum& rd);

// Order-2 affine diagram automorphism exchanging node 0 and node i
// (1-based, as in the affine diagram). Among several, the one moving the
// fewest nodes is chosen, ties broken lexicographically. std::nullopt is the
// "case-2 vertex" signal: no such automorphism exists.
std::optional<DiagramMap> affine_automorphism_swapping(const RootDatum& rd, int i);

// JSON dump of the datum for debugging.
std::string root_datum_json(const RootDatum& rd);

}  // namespace fusionring
