#pragma once

#include <string>
#include <vector>

#include "fusionring/weight.hpp"

namespace fusionring::detail {

// nu = [k,0,0,0,0,0] for E6, mu = [0,0,0,0,0,0,k] for E7.
enum class Factor { None, Nu, Mu };

struct TableTerm {
  int sign = 1;
  Weight weight;  // zero for a bare factor
  Factor factor = Factor::None;
};

// One generator row, e.g. "[k-1,1,0,0,0,1]+[1,0,0,0,0,0]*nu", instantiated at k.
std::vector<TableTerm> parse_row(const std::string& row, int k, int n);

}  // namespace fusionring::detail
