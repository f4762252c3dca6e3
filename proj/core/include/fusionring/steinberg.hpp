#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fusionring/weyl.hpp"

namespace fusionring {

struct SteinbergEntry {
  WeylWord word;
  Weight positive_weight;  // lambda_w: sum of lambda_i over the left descents of w
  Weight basis_weight;     // w^{-1} lambda_w
  int bfs_level = 0;       // word length
};

struct SteinbergBasis {
  uint32_t subset = 0;  // node mask of S
  std::vector<SteinbergEntry> entries;
};

// Minimal-length coset representatives {w : w(R_S^+) > 0}, by breadth-first
// search from the identity: parents in discovery order, generators
// ascending, first discovery kept. Each word is reduced.
std::vector<WeylWord> positive_weyl_group(const RootDatum& rd, uint32_t subset);
SteinbergBasis steinberg_basis(const RootDatum& rd, uint32_t subset);

// The vertex used for each type: node 1 for A, B, C, D, E6, F4; node 2 for
// G2; node 7 for E7; node 8 for E8 (returned 0-based).
int default_vertex(LieType t);
inline uint32_t complement_of(const RootDatum& rd, int v) { return all_nodes(rd) & ~(1u << v); }

// C_v at level k: nonnegative on nodes j != v and level at most k.
bool in_vertex_chamber(const RootDatum& rd, int v, int k, const Weight& x);

enum class AffineTransform { DiagramMap, Reflection, ShiftOnly };

struct AffineSteinbergBasis {
  int level = 0;
  int vertex = 0;
  AffineTransform transform = AffineTransform::DiagramMap;
  std::optional<DiagramMap> diagram;  // set for AffineTransform::DiagramMap
  Weight shift;                       // added after the transform
  bool edge_only = false;             // twisted parity: AB_v empty, only the Z_e basis is meaningful
  SteinbergBasis base;
  std::vector<Weight> ab_e;
  std::vector<Weight> ab_v;
  std::string description() const;
};

struct UnsupportedCase : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Throws UnsupportedCase naming the obstruction for (v, k) outside the
// supported list.
AffineSteinbergBasis affine_steinberg_basis(const RootDatum& rd, int v, int k);

}  // namespace fusionring
