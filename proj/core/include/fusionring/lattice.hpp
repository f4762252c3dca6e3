#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "fusionring/weight.hpp"

namespace fusionring {

// Sparse integer vector, entries sorted by column, no zeros.
using SparseRow = std::vector<std::pair<std::size_t, Integer>>;

// Row echelon form of an integer lattice, maintained incrementally with
// unimodular row operations (extended gcd on leading entries). Column 0 is
// the most significant. Entries above pivots are not reduced; membership
// tests only need the echelon shape.
class LatticeEchelon {
 public:
  void insert(SparseRow v);
  bool contains(SparseRow v) const;
  std::size_t rank() const { return pivots_.size(); }
  // Pivot rows keyed by leading column.
  const std::map<std::size_t, SparseRow>& pivots() const { return pivots_; }

 private:
  std::map<std::size_t, SparseRow> pivots_;
};

// a*x + b*y
SparseRow combine(const Integer& a, const SparseRow& x, const Integer& b, const SparseRow& y);

}  // namespace fusionring
