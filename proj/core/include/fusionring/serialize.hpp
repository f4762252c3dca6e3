#pragma once

#include <string>
#include <vector>

#include "fusionring/fusion.hpp"
#include "fusionring/ideal.hpp"
#include "fusionring/verify.hpp"

namespace fusionring {

// JSON output carries a "schema" key; characters are arrays of
// {"coeff", "weight"} in canonical order. Coefficients that do not fit in
// 64 bits are emitted as decimal strings.
std::string generators_json(const RootDatum& rd, const GeneratorSet& gs);
std::string generators_text(const RootDatum& rd, const GeneratorSet& gs);

std::string steinberg_json(const RootDatum& rd, const SteinbergBasis& sb);
std::string steinberg_text(const RootDatum& rd, const SteinbergBasis& sb);
std::string affine_steinberg_json(const RootDatum& rd, const AffineSteinbergBasis& ab);
std::string affine_steinberg_text(const RootDatum& rd, const AffineSteinbergBasis& ab);

// Nonzero fusion coefficients N_{ab}^c.
std::string fusion_table_json(const RootDatum& rd, int k, const std::vector<Weight>& alcove,
                              const std::vector<std::vector<std::vector<int64_t>>>& n);
std::string fusion_table_tsv(const RootDatum& rd, const std::vector<Weight>& alcove,
                             const std::vector<std::vector<std::vector<int64_t>>>& n);

// Wall times appear only when `timing` is set.
std::string reports_json(const std::vector<VerifyReport>& reports, bool timing);
std::string reports_text(const std::vector<VerifyReport>& reports, bool timing);

}  // namespace fusionring
