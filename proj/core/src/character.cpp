#include "fusionring/character.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <tuple>
#include <unordered_map>
#include <unordered_set>

namespace fusionring {

void VirtualCharacter::add(const Weight& w, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

VirtualCharacter& VirtualCharacter::operator+=(const VirtualCharacter& o) {
  for (const auto& [w, c] : o.terms) add(w, c);
  return *this;
}

VirtualCharacter& VirtualCharacter::operator-=(const VirtualCharacter& o) {
  for (const auto& [w, c] : o.terms) add(w, -c);
  return *this;
}

VirtualCharacter& VirtualCharacter::operator*=(const Integer& s) {
  if (s == 0) {
    terms.clear();
    return *this;
  }
  for (auto& [w, c] : terms) c *= s;
  return *this;
}

VirtualCharacter operator+(VirtualCharacter a, const VirtualCharacter& b) { return a += b; }
VirtualCharacter operator-(VirtualCharacter a, const VirtualCharacter& b) { return a -= b; }
VirtualCharacter operator*(const Integer& s, VirtualCharacter a) { return a *= s; }

VirtualCharacter irreducible(const Weight& w, Chamber c) {
  VirtualCharacter x;
  x.chamber = c;
  x.terms.emplace(w, 1);
  return x;
}

void WeightSum::add(const Weight& w, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

Integer weyl_dimension(const RootDatum& rd, const Weight& lambda) {
  if (!rd.is_dominant(lambda)) throw std::invalid_argument("Weyl dimension needs a dominant weight");
  Integer num = 1, den = 1;
  const Weight shifted = lambda + rd.rho;
  for (const auto& beta : rd.positive_roots) {
    num *= rd.ip_scaled(shifted, beta);
    den *= rd.ip_scaled(rd.rho, beta);
  }
  if (num % den != 0) throw std::logic_error("Weyl dimension formula is not integral");
  return num / den;
}

Integer dimension(const RootDatum& rd, const VirtualCharacter& x) {
  if (x.chamber != Chamber::G) throw std::invalid_argument("dimension needs a G-dominant character");
  Integer d = 0;
  for (const auto& [w, c] : x.terms) d += c * weyl_dimension(rd, w);
  return d;
}

namespace {

WeightSystem compute_weight_system(const RootDatum& rd, const Weight& lambda) {
  // Dominant weights below lambda: connected under subtraction of positive roots.
  std::vector<Weight> dom{lambda};
  std::unordered_set<Weight, WeightHash> seen{lambda};
  for (std::size_t q = 0; q < dom.size(); ++q)
    for (const auto& beta : rd.positive_roots) {
      Weight nu = dom[q] - beta;
      if (rd.is_dominant(nu) && seen.insert(nu).second) dom.push_back(nu);
    }
  std::sort(dom.begin(), dom.end(), [&](const Weight& a, const Weight& b) {
    const auto ha = rd.height_scaled(a), hb = rd.height_scaled(b);
    if (ha != hb) return ha > hb;
    return a > b;
  });

  std::unordered_map<Weight, Integer, WeightHash> mult;
  mult.reserve(dom.size() * 2);
  const int64_t top = rd.norm_scaled(lambda + rd.rho);
  auto lookup = [&](const Weight& w) -> const Integer* {
    auto it = mult.find(dominant_conjugate(rd, w));
    return it == mult.end() ? nullptr : &it->second;
  };
  for (const Weight& mu : dom) {
    if (mu == lambda) {
      mult.emplace(mu, 1);
      continue;
    }
    Integer acc = 0;
    for (const auto& beta : rd.positive_roots) {
      Weight up = mu + beta;
      while (const Integer* m = lookup(up)) {
        acc += *m * rd.ip_scaled(up, beta);
        up += beta;
      }
    }
    acc *= 2;
    const int64_t denom = top - rd.norm_scaled(mu + rd.rho);
    if (denom <= 0 || acc % denom != 0) throw std::logic_error("Freudenthal recursion is not integral");
    mult.emplace(mu, acc / denom);
  }

  WeightSystem ws;
  ws.highest = lambda;
  ws.dimension = 0;
  for (const Weight& mu : dom) {
    const Integer& m = mult.at(mu);
    if (m == 0) continue;
    ws.dominant.emplace_back(mu, m);
    for (const Weight& p : orbit(rd, mu)) {
      ws.all.emplace_back(p, m);
      ws.dimension += m;
    }
  }
  return ws;
}

struct WeightSystemCache {
  std::shared_mutex mu;
  std::map<std::tuple<int, int, Weight>, std::unique_ptr<WeightSystem>> table;
};

WeightSystemCache& cache() {
  static WeightSystemCache c;
  return c;
}

}  // namespace

const WeightSystem& weight_system(const RootDatum& rd, const Weight& lambda) {
  if (!rd.is_dominant(lambda)) throw std::invalid_argument("weight system needs a dominant weight");
  auto& c = cache();
  const auto key = std::make_tuple(static_cast<int>(rd.type.family), rd.n, lambda);
  {
    std::shared_lock lock(c.mu);
    auto it = c.table.find(key);
    if (it != c.table.end()) return *it->second;
  }
  auto ws = std::make_unique<WeightSystem>(compute_weight_system(rd, lambda));
  std::unique_lock lock(c.mu);
  auto [it, inserted] = c.table.try_emplace(key, std::move(ws));
  return *it->second;
}

WeightSum weight_system_sum(const RootDatum& rd, const Weight& lambda) {
  WeightSum s;
  for (const auto& [w, m] : weight_system(rd, lambda).all) s.add(w, m);
  return s;
}

VirtualCharacter tensor_irreducibles(const RootDatum& rd, const Weight& lambda, const Weight& mu) {
  if (!rd.is_dominant(lambda) || !rd.is_dominant(mu))
    throw std::invalid_argument("tensor needs dominant weights");
  const bool swap = weyl_dimension(rd, lambda) < weyl_dimension(rd, mu);
  const Weight& big = swap ? mu : lambda;
  const Weight& small = swap ? lambda : mu;
  VirtualCharacter out;
  const auto finite = ReflectionGroupSpec::finite();
  for (const auto& [nu, m] : weight_system(rd, small).all) {
    const SignedWeight s = straighten(rd, big + nu, finite);
    if (s.sign > 0)
      out.add(s.weight, m);
    else if (s.sign < 0)
      out.add(s.weight, -m);
  }
  return out;
}

VirtualCharacter tensor(const RootDatum& rd, const VirtualCharacter& x, const VirtualCharacter& y) {
  if (x.chamber != Chamber::G || y.chamber != Chamber::G)
    throw std::invalid_argument("tensor needs G-dominant characters");
  VirtualCharacter out;
  for (const auto& [a, ca] : x.terms)
    for (const auto& [b, cb] : y.terms) {
      const Integer c = ca * cb;
      for (const auto& [w, m] : tensor_irreducibles(rd, a, b).terms) out.add(w, c * m);
    }
  return out;
}

WeightSum antisymmetrize(const RootDatum& rd, const Weight& lambda, const ReflectionGroupSpec& g,
                         const AntisymmetrizeOptions& opt) {
  const Weight shift = g.shift == Shift::Rho || g.kind == GroupKind::VertexGroup ? rd.rho : Weight{};
  if (g.kind == GroupKind::AffineLevel && !opt.norm_bound)
    throw std::invalid_argument("affine antisymmetrization needs a norm bound");
  uint64_t cap = opt.max_group_order;
  if (g.kind == GroupKind::FiniteW || g.kind == GroupKind::FiniteParabolic) {
    const uint32_t mask = g.kind == GroupKind::FiniteW ? all_nodes(rd) : g.node_mask;
    const Integer order = weyl_group_order(rd, mask);
    if (order > cap)
      throw CapacityError("group order " + order.str() + " exceeds bound " + std::to_string(cap));
  }
  WeightSum out;
  if (on_wall(rd, lambda, g)) return out;

  // A regular point's orbit is in bijection with the group; each generator is
  // a reflection, so the sign is the parity of the BFS distance.
  uint32_t finite = all_nodes(rd);
  bool affine = false;
  int m = 0;
  switch (g.kind) {
    case GroupKind::FiniteW: break;
    case GroupKind::FiniteParabolic: finite = g.node_mask; break;
    case GroupKind::AffineLevel:
      affine = true;
      m = g.level_m;
      break;
    case GroupKind::VertexGroup:
      finite &= ~(1u << g.vertex);
      affine = true;
      m = g.k + rd.dual_coxeter;
      break;
  }
  const Weight x0 = lambda + shift;
  std::vector<std::pair<Weight, int>> pts{{x0, 0}};
  std::unordered_set<Weight, WeightHash> seen{x0};
  for (std::size_t q = 0; q < pts.size(); ++q) {
    const auto [p, d] = pts[q];
    auto visit = [&](const Weight& r) {
      if (opt.norm_bound && g.kind == GroupKind::AffineLevel && rd.norm_scaled(r) > *opt.norm_bound) return;
      if (seen.insert(r).second) {
        pts.emplace_back(r, d + 1);
        if (pts.size() > cap) throw CapacityError("orbit exceeds bound " + std::to_string(cap));
      }
    };
    for (int i = 0; i < rd.n; ++i)
      if (finite >> i & 1u) visit(reflect(rd, i, p));
    if (affine) visit(affine_reflect(rd, m, p));
  }
  for (const auto& [p, d] : pts) out.add(p - shift, d % 2 ? -1 : 1);
  return out;
}

VirtualCharacter induct_to_G(const RootDatum& rd, const VirtualCharacter& x) {
  VirtualCharacter out;
  const auto finite = ReflectionGroupSpec::finite();
  for (const auto& [w, c] : x.terms) {
    const SignedWeight s = straighten(rd, w, finite);
    if (s.sign != 0) out.add(s.weight, s.sign * c);
  }
  return out;
}

std::vector<std::pair<Weight, Integer>> canonical_terms(const RootDatum& rd, const VirtualCharacter& x) {
  std::vector<std::pair<Weight, Integer>> v(x.terms.begin(), x.terms.end());
  std::sort(v.begin(), v.end(),
            [&](const auto& a, const auto& b) { return canonical_less(rd, a.first, b.first); });
  return v;
}

VirtualCharacter sign_normalized(const RootDatum& rd, VirtualCharacter x) {
  if (x.is_zero()) return x;
  auto top = x.terms.begin();
  for (auto it = x.terms.begin(); it != x.terms.end(); ++it)
    if (canonical_less(rd, top->first, it->first)) top = it;
  if (top->second < 0) x *= -1;
  return x;
}

bool character_less(const RootDatum& rd, const VirtualCharacter& a, const VirtualCharacter& b) {
  const auto ta = canonical_terms(rd, a), tb = canonical_terms(rd, b);
  const std::size_t n = std::min(ta.size(), tb.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (ta[i].first != tb[i].first) return canonical_less(rd, ta[i].first, tb[i].first);
    if (ta[i].second != tb[i].second) return ta[i].second < tb[i].second;
  }
  return ta.size() < tb.size();
}

std::string to_string(const RootDatum& rd, const VirtualCharacter& x) {
  if (x.is_zero()) return "0";
  std::string s;
  bool first = true;
  const auto terms = canonical_terms(rd, x);
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    const auto& [w, c] = *it;
    if (c < 0)
      s += first ? "-" : " - ";
    else if (!first)
      s += " + ";
    const Integer a = abs(c);
    if (a != 1) s += a.str() + "*";
    s += to_string(w, rd.n);
    first = false;
  }
  return s;
}

}  // namespace fusionring
