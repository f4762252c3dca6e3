#include "fusionring/weyl.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace fusionring {

std::string word_to_string(const WeylWord& w) {
  if (w.empty()) return "1";
  std::string s;
  for (int i : w) s += i < 0 ? "0" : std::to_string(i + 1);
  return s;
}

WeylWord parse_word(const std::string& s) {
  WeylWord w;
  if (s == "1" || s.empty()) return w;
  for (char ch : s) {
    if (ch < '1' || ch > '9') throw std::invalid_argument("bad Weyl word '" + s + "'");
    w.push_back(ch - '1');
  }
  return w;
}

Weight reflect(const RootDatum& rd, int i, Weight x) {
  const int c = x[i];
  if (c != 0) {
    const Weight& a = rd.simple_roots[i];
    for (int j = 0; j < rd.n; ++j) x[j] -= c * a[j];
  }
  return x;
}

Weight affine_reflect(const RootDatum& rd, int m, Weight x) {
  const int t = rd.level(x) - m;
  if (t != 0)
    for (int j = 0; j < rd.n; ++j) x[j] -= t * rd.theta[j];
  return x;
}

Weight apply_word(const RootDatum& rd, const WeylWord& w, Weight x) {
  for (auto it = w.rbegin(); it != w.rend(); ++it) x = reflect(rd, *it, x);
  return x;
}

WeylWord inverse_word(const WeylWord& w) { return WeylWord(w.rbegin(), w.rend()); }

namespace {

struct Walls {
  uint32_t finite = 0;
  bool affine = false;
  int m = 0;
  Weight shift;
};

Walls walls_of(const RootDatum& rd, const ReflectionGroupSpec& g) {
  Walls w;
  if (g.shift == Shift::Rho) w.shift = rd.rho;
  switch (g.kind) {
    case GroupKind::FiniteW:
      w.finite = all_nodes(rd);
      break;
    case GroupKind::FiniteParabolic:
      if (g.node_mask & ~all_nodes(rd)) throw std::invalid_argument("parabolic subset outside the diagram");
      w.finite = g.node_mask;
      break;
    case GroupKind::AffineLevel:
      if (g.level_m < 1) throw std::invalid_argument("affine straightening needs level m >= 1");
      w.finite = all_nodes(rd);
      w.affine = true;
      w.m = g.level_m;
      break;
    case GroupKind::VertexGroup:
      if (g.vertex < 0 || g.vertex >= rd.n) throw std::invalid_argument("vertex out of range");
      if (g.k < 0) throw std::invalid_argument("vertex group needs level k >= 0");
      w.finite = all_nodes(rd) & ~(1u << g.vertex);
      w.affine = true;
      w.m = g.k + rd.dual_coxeter;
      w.shift = rd.rho;
      break;
  }
  return w;
}

}  // namespace

bool on_wall(const RootDatum& rd, const Weight& lambda, const ReflectionGroupSpec& g) {
  const Walls w = walls_of(rd, g);
  const Weight x = lambda + w.shift;
  // Affine roots beta + j delta give walls (x, beta) = -j m. The full affine
  // group has every j; the vertex group keeps j = 0 with beta_v = 0 and
  // j = -1 with beta_v = mark_v; a parabolic keeps roots supported on S.
  const int64_t scale = rd.gram_scale;
  for (std::size_t r = 0; r < rd.positive_roots.size(); ++r) {
    const auto& coords = rd.positive_root_coords[r];
    const int64_t p = rd.ip_scaled(x, rd.positive_roots[r]);
    switch (g.kind) {
      case GroupKind::FiniteW:
        if (p == 0) return true;
        break;
      case GroupKind::FiniteParabolic: {
        bool inside = true;
        for (int j = 0; j < rd.n; ++j)
          if (coords[j] != 0 && !(w.finite >> j & 1u)) inside = false;
        if (inside && p == 0) return true;
        break;
      }
      case GroupKind::AffineLevel:
        if (p % (scale * w.m) == 0) return true;
        break;
      case GroupKind::VertexGroup:
        if (coords[g.vertex] == 0 && p == 0) return true;
        if (coords[g.vertex] == rd.marks[g.vertex] && p == scale * w.m) return true;
        break;
    }
  }
  return false;
}

SignedWeight straighten(const RootDatum& rd, const Weight& lambda, const ReflectionGroupSpec& g,
                        const WallChooser& choose) {
  const Walls w = walls_of(rd, g);
  Weight x = lambda + w.shift;
  int length = 0;
  int64_t norm = rd.norm_scaled(x);
  int64_t height = rd.height_scaled(x);
  std::vector<int> violated;
  while (true) {
    int pick = -2;
    if (choose) {
      violated.clear();
      for (int j = 0; j < rd.n; ++j)
        if ((w.finite >> j & 1u) && x[j] < 0) violated.push_back(j);
      if (w.affine && rd.level(x) > w.m) violated.push_back(-1);
      if (!violated.empty()) pick = choose(violated);
    } else {
      for (int j = 0; j < rd.n && pick == -2; ++j)
        if ((w.finite >> j & 1u) && x[j] < 0) pick = j;
      if (pick == -2 && w.affine && rd.level(x) > w.m) pick = -1;
    }
    if (pick == -2) break;
    x = pick < 0 ? affine_reflect(rd, w.m, x) : reflect(rd, pick, x);
    ++length;
    const int64_t norm2 = rd.norm_scaled(x);
    const int64_t height2 = rd.height_scaled(x);
    if (!(norm2 < norm || (norm2 == norm && height2 > height)))
      throw std::logic_error("straightening potential failed to decrease");
    norm = norm2;
    height = height2;
  }
  SignedWeight out;
  out.weight = x - w.shift;
  out.length = length;
  bool wall = w.affine && rd.level(x) == w.m;
  for (int j = 0; j < rd.n && !wall; ++j)
    if ((w.finite >> j & 1u) && x[j] == 0) wall = true;
  out.sign = wall ? 0 : (length % 2 ? -1 : 1);
  return out;
}

Weight dominant_conjugate(const RootDatum& rd, Weight x) {
  for (bool moved = true; moved;) {
    moved = false;
    for (int j = 0; j < rd.n; ++j)
      if (x[j] < 0) {
        x = reflect(rd, j, x);
        moved = true;
      }
  }
  return x;
}

std::vector<Weight> orbit(const RootDatum& rd, const Weight& dominant) {
  if (!rd.is_dominant(dominant)) throw std::invalid_argument("orbit expects a dominant weight");
  std::vector<Weight> out{dominant};
  std::unordered_set<Weight, WeightHash> seen{dominant};
  for (std::size_t q = 0; q < out.size(); ++q) {
    const Weight p = out[q];
    for (int i = 0; i < rd.n; ++i)
      if (p[i] > 0) {
        Weight r = reflect(rd, i, p);
        if (seen.insert(r).second) out.push_back(r);
      }
  }
  return out;
}

bool canonical_less(const RootDatum& rd, const Weight& a, const Weight& b) {
  const int la = rd.level(a), lb = rd.level(b);
  if (la != lb) return la < lb;
  return a < b;
}

std::vector<Weight> dominant_weights_in_levels(const RootDatum& rd, int lo, int hi) {
  std::vector<Weight> out;
  Weight cur;
  auto rec = [&](auto&& self, int i, int used) -> void {
    if (i == rd.n) {
      if (used > lo) out.push_back(cur);
      return;
    }
    for (int c = 0; used + c * rd.comarks[i] <= hi; ++c) {
      cur[i] = c;
      self(self, i + 1, used + c * rd.comarks[i]);
    }
    cur[i] = 0;
  };
  if (hi >= 0) rec(rec, 0, 0);
  std::sort(out.begin(), out.end(), [&](const Weight& a, const Weight& b) { return canonical_less(rd, a, b); });
  return out;
}

std::vector<Weight> enumerate_alcove(const RootDatum& rd, int k) {
  if (k < 0) throw std::invalid_argument("level must be nonnegative");
  return dominant_weights_in_levels(rd, -1, k);
}

}  // namespace fusionring
