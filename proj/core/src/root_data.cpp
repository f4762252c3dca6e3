#include "fusionring/root_data.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <stdexcept>

#include <boost/rational.hpp>
#include <json.hpp>

namespace fusionring {

namespace {

using Rational = boost::rational<int64_t>;
using RMatrix = std::vector<std::vector<Rational>>;

RMatrix inverse(const std::vector<std::vector<int>>& m) {
  const int n = static_cast<int>(m.size());
  RMatrix a(n, std::vector<Rational>(2 * n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[i][j] = m[i][j];
    a[i][n + i] = 1;
  }
  for (int c = 0; c < n; ++c) {
    int p = c;
    while (p < n && a[p][c].numerator() == 0) ++p;
    if (p == n) throw std::logic_error("singular Cartan matrix");
    std::swap(a[c], a[p]);
    const Rational pv = a[c][c];
    for (auto& x : a[c]) x /= pv;
    for (int r = 0; r < n; ++r) {
      if (r == c || a[r][c].numerator() == 0) continue;
      const Rational f = a[r][c];
      for (int j = 0; j < 2 * n; ++j) a[r][j] -= f * a[c][j];
    }
  }
  RMatrix inv(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv[i][j] = a[i][n + j];
  return inv;
}

int64_t determinant(const std::vector<std::vector<int>>& m) {
  const int n = static_cast<int>(m.size());
  RMatrix a(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = m[i][j];
  Rational det = 1;
  for (int c = 0; c < n; ++c) {
    int p = c;
    while (p < n && a[p][c].numerator() == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(a[c], a[p]);
      det = -det;
    }
    det *= a[c][c];
    for (int r = c + 1; r < n; ++r) {
      const Rational f = a[r][c] / a[c][c];
      for (int j = c; j < n; ++j) a[r][j] -= f * a[c][j];
    }
  }
  if (det.denominator() != 1) throw std::logic_error("non-integral determinant");
  return det.numerator();
}

std::vector<std::vector<int>> family_cartan(Family f, int n) {
  std::vector<std::vector<int>> c(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) c[i][i] = 2;
  // 1-based nodes; sets c[i][j] = a and c[j][i] = b.
  auto link = [&](int i, int j, int a = -1, int b = -1) {
    c[i - 1][j - 1] = a;
    c[j - 1][i - 1] = b;
  };
  switch (f) {
    case Family::A:
      for (int i = 1; i < n; ++i) link(i, i + 1);
      break;
    case Family::B:
      for (int i = 1; i < n - 1; ++i) link(i, i + 1);
      link(n - 1, n, -1, -2);
      break;
    case Family::C:
      for (int i = 1; i < n - 1; ++i) link(i, i + 1);
      link(n - 1, n, -2, -1);
      break;
    case Family::D:
      for (int i = 1; i < n - 1; ++i) link(i, i + 1);
      link(n - 2, n);
      break;
    case Family::E:
      link(1, 3);
      link(3, 4);
      link(2, 4);
      for (int i = 4; i < n; ++i) link(i, i + 1);
      break;
    case Family::F:
      link(1, 2);
      link(2, 3, -1, -2);
      link(3, 4);
      break;
    case Family::G:
      link(1, 2, -3, -1);
      break;
  }
  return c;
}

// Positive roots (simple-root coordinates) of an arbitrary Cartan matrix
// restricted to `nodes`, by closure under simple reflections from the
// simple roots.
std::vector<std::vector<int>> positive_roots_of(const std::vector<std::vector<int>>& c,
                                                const std::vector<int>& nodes) {
  const int n = static_cast<int>(c.size());
  std::set<std::vector<int>> roots;
  std::vector<std::vector<int>> frontier;
  for (int i : nodes) {
    std::vector<int> r(n, 0);
    r[i] = 1;
    roots.insert(r);
    frontier.push_back(r);
  }
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& r : frontier) {
      for (int i : nodes) {
        int pairing = 0;
        for (int j = 0; j < n; ++j) pairing += c[i][j] * r[j];
        std::vector<int> s = r;
        s[i] -= pairing;
        bool nonneg = true, nonzero = false;
        for (int x : s) {
          if (x < 0) nonneg = false;
          if (x != 0) nonzero = true;
        }
        if (nonneg && nonzero && roots.insert(s).second) next.push_back(s);
      }
    }
    frontier = std::move(next);
  }
  return {roots.begin(), roots.end()};
}

int height(const std::vector<int>& r) { return std::accumulate(r.begin(), r.end(), 0); }

}  // namespace

std::string to_string(const Weight& w, int rank) {
  std::string s = "[";
  for (int i = 0; i < rank; ++i) {
    if (i) s += ',';
    s += std::to_string(w[i]);
  }
  return s + "]";
}

char family_letter(Family f) { return "ABCDEFG"[static_cast<int>(f)]; }

std::string to_string(LieType t) { return family_letter(t.family) + std::to_string(t.rank); }

void validate(LieType t) {
  const std::string name = to_string(t);
  auto fail = [&](const std::string& why) {
    throw std::invalid_argument("invalid Lie type " + name + ": " + why);
  };
  if (t.rank < 1) fail("rank must be positive");
  if (t.rank > kMaxRank) fail("rank above supported maximum " + std::to_string(kMaxRank));
  switch (t.family) {
    case Family::A: break;
    case Family::B:
      if (t.rank < 3) fail("type B requires rank >= 3");
      break;
    case Family::C:
      if (t.rank < 2) fail("type C requires rank >= 2");
      break;
    case Family::D:
      if (t.rank < 4) fail("type D requires rank >= 4");
      break;
    case Family::E:
      if (t.rank < 6 || t.rank > 8) fail("type E requires rank 6, 7 or 8");
      break;
    case Family::F:
      if (t.rank != 4) fail("type F requires rank 4");
      break;
    case Family::G:
      if (t.rank != 2) fail("type G requires rank 2");
      break;
  }
}

LieType parse_lie_type(std::string_view code) {
  if (code.size() < 2) throw std::invalid_argument("bad Lie type code '" + std::string(code) + "'");
  const char f = static_cast<char>(std::toupper(static_cast<unsigned char>(code[0])));
  const std::string letters = "ABCDEFG";
  const auto pos = letters.find(f);
  if (pos == std::string::npos)
    throw std::invalid_argument("bad Lie type family in '" + std::string(code) + "'");
  int rank = 0;
  for (char ch : code.substr(1)) {
    if (!std::isdigit(static_cast<unsigned char>(ch)))
      throw std::invalid_argument("bad Lie type rank in '" + std::string(code) + "'");
    rank = rank * 10 + (ch - '0');
    if (rank > 1000) throw std::invalid_argument("rank too large in '" + std::string(code) + "'");
  }
  LieType t{static_cast<Family>(pos), rank};
  validate(t);
  return t;
}

int64_t RootDatum::ip_scaled(const Weight& x, const Weight& y) const {
  int64_t s = 0;
  for (int i = 0; i < n; ++i) {
    if (x[i] == 0) continue;
    int64_t row = 0;
    for (int j = 0; j < n; ++j) row += gram_scaled[i][j] * y[j];
    s += row * x[i];
  }
  return s;
}

int64_t RootDatum::height_scaled(const Weight& x) const {
  int64_t s = 0;
  for (int j = 0; j < n; ++j) s += height_row[j] * x[j];
  return s;
}

std::vector<int> RootDatum::to_root_coords(const Weight& x) const {
  // adj(C) x / det(C); adj(C) = det * C^{-1} is recovered from gram_scaled.
  std::vector<int> out(n);
  for (int i = 0; i < n; ++i) {
    // gram_scaled[i][j] = symmetrizer[i] * adj[i][j]
    int64_t s = 0;
    for (int j = 0; j < n; ++j) s += (gram_scaled[i][j] / symmetrizer[i]) * x[j];
    if (s % cartan_det != 0) throw std::invalid_argument("weight is not in the root lattice");
    out[i] = static_cast<int>(s / cartan_det);
  }
  return out;
}

bool RootDatum::is_root(const Weight& x) const {
  for (const auto& r : positive_roots)
    if (r == x || r == -x) return true;
  return false;
}

RootDatum build_root_datum(LieType t) {
  validate(t);
  RootDatum rd;
  rd.type = t;
  rd.n = t.rank;
  const int n = rd.n;
  rd.cartan = family_cartan(t.family, n);
  const auto& c = rd.cartan;

  // Symmetrizer: d_i c_ij = d_j c_ji along the connected diagram.
  std::vector<Rational> d(n, Rational(0));
  d[0] = 1;
  for (bool changed = true; changed;) {
    changed = false;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (d[i].numerator() != 0 && d[j].numerator() == 0 && c[i][j] != 0) {
          d[j] = d[i] * Rational(c[i][j], c[j][i]);
          changed = true;
        }
  }
  int64_t den = 1;
  for (const auto& x : d) den = std::lcm(den, x.denominator());
  std::vector<int64_t> dint(n);
  for (int i = 0; i < n; ++i) dint[i] = (d[i] * den).numerator();
  int64_t g = 0;
  for (auto x : dint) g = std::gcd(g, x);
  for (int i = 0; i < n; ++i) rd.symmetrizer.push_back(static_cast<int>(dint[i] / g));
  const int dmax = *std::max_element(rd.symmetrizer.begin(), rd.symmetrizer.end());

  for (int j = 0; j < n; ++j) {
    Weight a;
    for (int i = 0; i < n; ++i) a[i] = c[i][j];
    rd.simple_roots.push_back(a);
  }

  std::vector<int> nodes(n);
  std::iota(nodes.begin(), nodes.end(), 0);
  auto roots = positive_roots_of(c, nodes);
  std::stable_sort(roots.begin(), roots.end(), [](const auto& a, const auto& b) {
    if (height(a) != height(b)) return height(a) < height(b);
    return a < b;
  });
  rd.positive_root_coords = roots;
  for (const auto& r : roots) {
    Weight w;
    for (int j = 0; j < n; ++j)
      if (r[j]) w += r[j] * rd.simple_roots[j];
    rd.positive_roots.push_back(w);
  }
  rd.marks = roots.back();
  rd.theta = rd.positive_roots.back();
  for (int i = 0; i < n; ++i) {
    const int num = rd.marks[i] * rd.symmetrizer[i];
    if (num % dmax != 0) throw std::logic_error("non-integral comark");
    rd.comarks.push_back(num / dmax);
  }
  rd.dual_coxeter = 1 + std::accumulate(rd.comarks.begin(), rd.comarks.end(), 0);
  for (int i = 0; i < n; ++i) rd.rho[i] = 1;

  rd.cartan_det = determinant(c);
  const RMatrix ci = inverse(c);
  rd.gram_scaled.assign(n, std::vector<int64_t>(n));
  rd.height_row.assign(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Rational adj = ci[i][j] * rd.cartan_det;
      if (adj.denominator() != 1) throw std::logic_error("non-integral adjugate");
      rd.gram_scaled[i][j] = rd.symmetrizer[i] * adj.numerator();
      rd.height_row[j] += adj.numerator();
    }
  rd.gram_scale = static_cast<int64_t>(dmax) * rd.cartan_det;

  if (rd.level(rd.theta) != 2) throw std::logic_error("level(theta) != 2");
  return rd;
}

const RootDatum& root_datum(LieType t) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::unique_ptr<RootDatum>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{static_cast<int>(t.family), t.rank}];
  if (!slot) slot = std::make_unique<RootDatum>(build_root_datum(t));
  return *slot;
}

Integer weyl_group_order(const RootDatum& rd, uint32_t node_mask) {
  // Split the sub-diagram into connected components.
  Integer order = 1;
  uint32_t remaining = node_mask;
  while (remaining) {
    int start = __builtin_ctz(remaining);
    std::vector<int> comp{start};
    uint32_t seen = 1u << start;
    for (std::size_t q = 0; q < comp.size(); ++q)
      for (int j = 0; j < rd.n; ++j)
        if ((node_mask >> j & 1u) && !(seen >> j & 1u) && rd.cartan[comp[q]][j] != 0) {
          seen |= 1u << j;
          comp.push_back(j);
        }
    remaining &= ~seen;
    std::sort(comp.begin(), comp.end());
    const int r = static_cast<int>(comp.size());
    std::vector<std::vector<int>> sub(r, std::vector<int>(r));
    for (int a = 0; a < r; ++a)
      for (int b = 0; b < r; ++b) sub[a][b] = rd.cartan[comp[a]][comp[b]];
    std::vector<int> local(r);
    std::iota(local.begin(), local.end(), 0);
    auto roots = positive_roots_of(sub, local);
    auto top = *std::max_element(roots.begin(), roots.end(),
                                 [](const auto& a, const auto& b) { return height(a) < height(b); });
    Integer part = determinant(sub);
    for (int i = 1; i <= r; ++i) part *= i;
    for (int m : top) part *= m;
    order *= part;
  }
  return order;
}

std::vector<std::vector<int>> affine_cartan(const RootDatum& rd) {
  const int n = rd.n;
  std::vector<Weight> roots{-rd.theta};
  for (const auto& a : rd.simple_roots) roots.push_back(a);
  auto pair = [&](const Weight& x, int i) { return i == 0 ? -rd.level(x) : x[i - 1]; };
  std::vector<std::vector<int>> a(n + 1, std::vector<int>(n + 1));
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j) a[i][j] = pair(roots[j], i);
  return a;
}

Weight DiagramMap::apply(const Weight& x) const {
  Weight y;
  const int n = static_cast<int>(matrix.size());
  for (int i = 0; i < n; ++i) {
    int s = 0;
    for (int j = 0; j < n; ++j) s += matrix[i][j] * x[j];
    y[i] = s;
  }
  return y;
}

std::optional<DiagramMap> affine_automorphism_swapping(const RootDatum& rd, int i) {
  const int n = rd.n;
  if (i < 1 || i > n) throw std::invalid_argument("node out of range");
  const auto a = affine_cartan(rd);
  const int total = n + 1;

  std::vector<std::vector<int>> found;
  std::vector<int> perm(total, -1);
  std::vector<bool> used(total, false);
  perm[0] = i;
  perm[i] = 0;
  used[0] = used[i] = true;
  // Backtracking over the remaining nodes with adjacency pruning.
  auto consistent = [&](int p) {
    for (int q = 0; q < total; ++q) {
      if (perm[q] < 0) continue;
      if (a[perm[p]][perm[q]] != a[p][q] || a[perm[q]][perm[p]] != a[q][p]) return false;
    }
    return true;
  };
  if (!consistent(0) || !consistent(i)) return std::nullopt;
  auto rec = [&](auto&& self, int p) -> void {
    while (p < total && perm[p] >= 0) ++p;
    if (p == total) {
      bool involution = true;
      for (int q = 0; q < total; ++q)
        if (perm[perm[q]] != q) involution = false;
      if (involution) found.push_back(perm);
      return;
    }
    for (int img = 0; img < total; ++img) {
      if (used[img]) continue;
      perm[p] = img;
      used[img] = true;
      if (consistent(p)) self(self, p + 1);
      used[img] = false;
      perm[p] = -1;
    }
  };
  rec(rec, 1);
  if (found.empty()) return std::nullopt;
  auto moved = [&](const std::vector<int>& p) {
    int m = 0;
    for (int q = 0; q < total; ++q) m += p[q] != q;
    return m;
  };
  std::sort(found.begin(), found.end(), [&](const auto& x, const auto& y) {
    if (moved(x) != moved(y)) return moved(x) < moved(y);
    return x < y;
  });

  DiagramMap dm;
  dm.perm = found.front();
  std::vector<Weight> roots{-rd.theta};
  for (const auto& r : rd.simple_roots) roots.push_back(r);
  // Linear map sending alpha_j to alpha_{perm[j]}: M * C^{-1}, columns of M
  // being the images.
  const RMatrix ci = inverse(rd.cartan);
  dm.matrix.assign(n, std::vector<int>(n));
  for (int r = 0; r < n; ++r)
    for (int col = 0; col < n; ++col) {
      Rational s = 0;
      for (int l = 0; l < n; ++l) s += Rational(roots[dm.perm[l + 1]][r]) * ci[l][col];
      if (s.denominator() != 1) throw std::logic_error("diagram map is not integral");
      dm.matrix[r][col] = static_cast<int>(s.numerator());
    }
  return dm;
}

std::string root_datum_json(const RootDatum& rd) {
  nlohmann::ordered_json j;
  j["schema"] = "fusionring.root_datum/1";
  j["type"] = rd.name();
  j["cartan"] = rd.cartan;
  j["symmetrizer"] = rd.symmetrizer;
  j["marks"] = rd.marks;
  j["comarks"] = rd.comarks;
  j["dual_coxeter"] = rd.dual_coxeter;
  auto coords = [&](const Weight& w) { return std::vector<int>(w.c.begin(), w.c.begin() + rd.n); };
  j["theta"] = coords(rd.theta);
  j["rho"] = coords(rd.rho);
  nlohmann::ordered_json simple = nlohmann::ordered_json::array();
  for (const auto& a : rd.simple_roots) simple.push_back(coords(a));
  j["simple_roots"] = simple;
  j["positive_root_count"] = rd.positive_roots.size();
  return j.dump(2);
}

}  // namespace fusionring
