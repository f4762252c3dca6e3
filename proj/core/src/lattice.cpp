#include "fusionring/lattice.hpp"

namespace fusionring {

namespace {

// g = x*a + y*b with g = gcd(a, b) > 0.
void extended_gcd(const Integer& a, const Integer& b, Integer& g, Integer& x, Integer& y) {
  Integer r0 = a, r1 = b, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (r1 != 0) {
    const Integer q = r0 / r1;
    Integer tmp = r0 - q * r1;
    r0 = r1;
    r1 = tmp;
    tmp = s0 - q * s1;
    s0 = s1;
    s1 = tmp;
    tmp = t0 - q * t1;
    t0 = t1;
    t1 = tmp;
  }
  if (r0 < 0) {
    r0 = -r0;
    s0 = -s0;
    t0 = -t0;
  }
  g = r0;
  x = s0;
  y = t0;
}

}  // namespace

SparseRow combine(const Integer& a, const SparseRow& x, const Integer& b, const SparseRow& y) {
  SparseRow out;
  out.reserve(x.size() + y.size());
  std::size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
      if (a != 0) out.emplace_back(x[i].first, a * x[i].second);
      ++i;
    } else if (i == x.size() || y[j].first < x[i].first) {
      if (b != 0) out.emplace_back(y[j].first, b * y[j].second);
      ++j;
    } else {
      Integer c = a * x[i].second + b * y[j].second;
      if (c != 0) out.emplace_back(x[i].first, std::move(c));
      ++i;
      ++j;
    }
  }
  return out;
}

void LatticeEchelon::insert(SparseRow v) {
  while (!v.empty()) {
    const std::size_t col = v.front().first;
    auto it = pivots_.find(col);
    if (it == pivots_.end()) {
      if (v.front().second < 0)
        for (auto& e : v) e.second = -e.second;
      pivots_.emplace(col, std::move(v));
      return;
    }
    SparseRow& p = it->second;
    const Integer a = p.front().second;
    const Integer b = v.front().second;
    if (b % a == 0) {
      v = combine(1, v, -(b / a), p);
      continue;
    }
    Integer g, x, y;
    extended_gcd(a, b, g, x, y);
    SparseRow top = combine(x, p, y, v);
    SparseRow rest = combine(a / g, v, -(b / g), p);
    p = std::move(top);
    v = std::move(rest);
  }
}

bool LatticeEchelon::contains(SparseRow v) const {
  while (!v.empty()) {
    auto it = pivots_.find(v.front().first);
    if (it == pivots_.end()) return false;
    const Integer& a = it->second.front().second;
    const Integer& b = v.front().second;
    if (b % a != 0) return false;
    v = combine(1, v, -(b / a), it->second);
  }
  return true;
}

}  // namespace fusionring
