#include "fusionring/fusion.hpp"

#include <cmath>
#include <numbers>

namespace fusionring {

FusionElement fusion_reduce(const RootDatum& rd, const VirtualCharacter& x, int k) {
  if (k < 1) throw std::invalid_argument("fusion level must be >= 1");
  if (x.chamber != Chamber::G) throw std::invalid_argument("fusion_reduce needs a G-dominant character");
  FusionElement out;
  out.level = k;
  const auto g = ReflectionGroupSpec::affine(k + rd.dual_coxeter);
  for (const auto& [w, c] : x.terms) {
    const SignedWeight s = straighten(rd, w, g);
    if (s.sign == 0) continue;
    auto [it, inserted] = out.terms.try_emplace(s.weight, s.sign * c);
    if (!inserted) {
      it->second += s.sign * c;
      if (it->second == 0) out.terms.erase(it);
    }
  }
  return out;
}

FusionElement fusion_product(const RootDatum& rd, const Weight& lambda, const Weight& mu, int k) {
  for (const Weight* w : {&lambda, &mu})
    if (!rd.is_dominant(*w) || rd.level(*w) > k)
      throw std::invalid_argument("fusion_product input " + to_string(*w, rd.n) + " is outside the level-" +
                                  std::to_string(k) + " alcove");
  return fusion_reduce(rd, tensor_irreducibles(rd, lambda, mu), k);
}

VirtualCharacter lift(const FusionElement& x) {
  VirtualCharacter out;
  for (const auto& [w, c] : x.terms) out.add(w, c);
  return out;
}

double SMatrix::unitarity_residual() const {
  const std::size_t n = s.size();
  double worst = 0;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      std::complex<double> acc = 0;
      for (std::size_t c = 0; c < n; ++c) acc += s[a][c] * std::conj(s[b][c]);
      worst = std::max(worst, std::abs(acc - (a == b ? 1.0 : 0.0)));
    }
  return worst;
}

double SMatrix::symmetry_residual() const {
  double worst = 0;
  for (std::size_t a = 0; a < s.size(); ++a)
    for (std::size_t b = 0; b < s.size(); ++b) worst = std::max(worst, std::abs(s[a][b] - s[b][a]));
  return worst;
}

SMatrix s_matrix(const RootDatum& rd, int k, const VerlindeOptions& opt) {
  const Integer order = weyl_group_order(rd, all_nodes(rd));
  if (order > opt.max_group_order)
    throw CapacityError("Weyl group order " + order.str() + " exceeds the Verlinde bound " +
                        std::to_string(opt.max_group_order));
  SMatrix sm;
  sm.level = k;
  sm.alcove = enumerate_alcove(rd, k);
  const std::size_t n = sm.alcove.size();
  const double denom = static_cast<double>(k + rd.dual_coxeter) * static_cast<double>(rd.gram_scale);
  const double two_pi = 2.0 * std::numbers::pi;

  // Alternating orbits of the shifted alcove points; shifted points are
  // regular, so the orbit is in bijection with W and the sign is the parity
  // of the BFS distance.
  std::vector<std::vector<std::pair<Weight, int>>> orbits(n);
  for (std::size_t a = 0; a < n; ++a) {
    const Weight x = sm.alcove[a] + rd.rho;
    const auto pts = orbit(rd, x);
    auto& o = orbits[a];
    o.reserve(pts.size());
    for (const Weight& p : pts) {
      const SignedWeight sw = straighten(rd, p - rd.rho, ReflectionGroupSpec::finite());
      o.emplace_back(p, sw.sign);
    }
  }
  sm.s.assign(n, std::vector<std::complex<double>>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const Weight y = sm.alcove[b] + rd.rho;
      std::complex<double> acc = 0;
      for (const auto& [p, sign] : orbits[a]) {
        const double phase = -two_pi * static_cast<double>(rd.ip_scaled(p, y)) / denom;
        acc += static_cast<double>(sign) * std::polar(1.0, phase);
      }
      sm.s[a][b] = acc;
    }
  double row = 0;
  for (std::size_t b = 0; b < n; ++b) row += std::norm(sm.s[0][b]);
  const std::complex<double> fix = std::conj(sm.s[0][0]) / std::abs(sm.s[0][0]) / std::sqrt(row);
  for (auto& r : sm.s)
    for (auto& v : r) v *= fix;
  return sm;
}

std::vector<std::vector<std::vector<int64_t>>> verlinde_table(const SMatrix& sm, double tolerance,
                                                              double* max_residual) {
  const std::size_t n = sm.s.size();
  std::vector<std::vector<std::vector<int64_t>>> out(n, std::vector<std::vector<int64_t>>(n, std::vector<int64_t>(n)));
  double worst = 0;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        std::complex<double> acc = 0;
        for (std::size_t s = 0; s < n; ++s) acc += sm.s[a][s] * sm.s[b][s] * std::conj(sm.s[c][s]) / sm.s[0][s];
        const double r = std::round(acc.real());
        const double resid = std::max(std::abs(acc.real() - r), std::abs(acc.imag()));
        worst = std::max(worst, resid);
        if (resid >= tolerance)
          throw OracleFailure("Verlinde value " + std::to_string(acc.real()) + "+" + std::to_string(acc.imag()) +
                              "i is not within tolerance of an integer at indices (" + std::to_string(a) + "," +
                              std::to_string(b) + "," + std::to_string(c) + ")");
        out[a][b][c] = out[b][a][c] = static_cast<int64_t>(r);
      }
  if (max_residual) *max_residual = worst;
  return out;
}

int64_t verlinde_fusion(const RootDatum& rd, const Weight& lambda, const Weight& mu, const Weight& nu, int k,
                        const VerlindeOptions& opt) {
  const SMatrix sm = s_matrix(rd, k, opt);
  auto index = [&](const Weight& w) {
    for (std::size_t i = 0; i < sm.alcove.size(); ++i)
      if (sm.alcove[i] == w) return i;
    throw std::invalid_argument(to_string(w, rd.n) + " is outside the level-" + std::to_string(k) + " alcove");
  };
  const std::size_t a = index(lambda), b = index(mu), c = index(nu);
  std::complex<double> acc = 0;
  for (std::size_t s = 0; s < sm.s.size(); ++s)
    acc += sm.s[a][s] * sm.s[b][s] * std::conj(sm.s[c][s]) / sm.s[0][s];
  const double r = std::round(acc.real());
  if (std::max(std::abs(acc.real() - r), std::abs(acc.imag())) >= opt.tolerance)
    throw OracleFailure("Verlinde value is not within tolerance of an integer");
  return static_cast<int64_t>(r);
}

std::vector<std::vector<std::vector<int64_t>>> kac_walton_table(const RootDatum& rd, int k) {
  const auto alcove = enumerate_alcove(rd, k);
  const std::size_t n = alcove.size();
  std::map<Weight, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) index[alcove[i]] = i;
  std::vector<std::vector<std::vector<int64_t>>> out(n, std::vector<std::vector<int64_t>>(n, std::vector<int64_t>(n)));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b) {
      const FusionElement f = fusion_product(rd, alcove[a], alcove[b], k);
      for (const auto& [w, c] : f.terms) {
        const auto v = static_cast<int64_t>(c);
        out[a][b][index.at(w)] = out[b][a][index.at(w)] = v;
      }
    }
  return out;
}

}  // namespace fusionring
