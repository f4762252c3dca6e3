#include "fusionring/steinberg.hpp"

#include <functional>
#include <unordered_set>

namespace fusionring {

namespace {

struct Node {
  WeylWord word;
  Weight point;  // w(lambda_S)
};

std::vector<std::vector<Node>> bfs_levels(const RootDatum& rd, uint32_t subset) {
  if (subset & ~all_nodes(rd)) throw std::invalid_argument("subset outside the diagram");
  // lambda_S has stabilizer exactly W_S, so its orbit is in bijection with
  // W / W_S. For w in W^S, s_i w is a longer element of W^S exactly when
  // <w lambda_S, alpha_i^vee> > 0.
  Weight seed;
  for (int j = 0; j < rd.n; ++j)
    if (!(subset >> j & 1u)) seed[j] = 1;
  std::vector<std::vector<Node>> levels{{Node{{}, seed}}};
  std::unordered_set<Weight, WeightHash> seen{seed};
  while (true) {
    std::vector<Node> next;
    for (const Node& nd : levels.back())
      for (int i = 0; i < rd.n; ++i) {
        if (nd.point[i] <= 0) continue;
        Weight p = reflect(rd, i, nd.point);
        if (!seen.insert(p).second) continue;
        WeylWord w{i};
        w.insert(w.end(), nd.word.begin(), nd.word.end());
        next.push_back(Node{std::move(w), p});
      }
    if (next.empty()) break;
    levels.push_back(std::move(next));
  }
  return levels;
}

}  // namespace

std::vector<WeylWord> positive_weyl_group(const RootDatum& rd, uint32_t subset) {
  std::vector<WeylWord> out;
  for (auto& level : bfs_levels(rd, subset))
    for (auto& nd : level) out.push_back(std::move(nd.word));
  return out;
}

SteinbergBasis steinberg_basis(const RootDatum& rd, uint32_t subset) {
  SteinbergBasis b;
  b.subset = subset;
  const auto levels = bfs_levels(rd, subset);
  for (std::size_t d = 0; d < levels.size(); ++d)
    for (const Node& nd : levels[d]) {
      SteinbergEntry e;
      e.word = nd.word;
      e.bfs_level = static_cast<int>(d);
      // w^{-1} alpha_i < 0 iff <w lambda_S, alpha_i^vee> < 0 for w in W^S.
      for (int i = 0; i < rd.n; ++i)
        if (nd.point[i] < 0) e.positive_weight[i] = 1;
      e.basis_weight = apply_word(rd, inverse_word(nd.word), e.positive_weight);
      b.entries.push_back(std::move(e));
    }
  return b;
}

int default_vertex(LieType t) {
  switch (t.family) {
    case Family::G: return 1;
    case Family::E: return t.rank == 6 ? 0 : t.rank - 1;
    default: return 0;
  }
}

bool in_vertex_chamber(const RootDatum& rd, int v, int k, const Weight& x) {
  for (int j = 0; j < rd.n; ++j)
    if (j != v && x[j] < 0) return false;
  return rd.level(x) <= k;
}

std::string AffineSteinbergBasis::description() const {
  std::string s;
  switch (transform) {
    case AffineTransform::DiagramMap: s = "diagram automorphism exchanging nodes 0 and v, then shift"; break;
    case AffineTransform::Reflection: s = "reflection in theta, then shift"; break;
    case AffineTransform::ShiftOnly: s = "shift only"; break;
  }
  if (edge_only) s += "; edge-only (AB_v empty)";
  return s;
}

AffineSteinbergBasis affine_steinberg_basis(const RootDatum& rd, int v, int k) {
  const std::string where = rd.name() + " vertex " + std::to_string(v + 1) + " level " + std::to_string(k);
  if (k < 1) throw UnsupportedCase(where + ": level must be >= 1");
  if (v != default_vertex(rd.type))
    throw UnsupportedCase(where + ": only vertex " + std::to_string(default_vertex(rd.type) + 1) +
                          " is supported for this type");
  AffineSteinbergBasis ab;
  ab.level = k;
  ab.vertex = v;
  ab.base = steinberg_basis(rd, complement_of(rd, v));
  const int av = rd.comarks[v];
  const Family f = rd.type.family;
  const bool divisible = k % av == 0;

  std::function<Weight(const Weight&)> transform;
  if (f == Family::G && !divisible) {
    ab.transform = AffineTransform::ShiftOnly;
    ab.shift = ((k + 1) / 2) * fundamental(v);
    transform = [](const Weight& x) { return x; };
  } else if (!divisible) {
    if (f != Family::F && !(f == Family::E && rd.n == 8))
      throw UnsupportedCase(where + ": comark " + std::to_string(av) +
                            " does not divide the level (twisted case, no affine Steinberg basis known)");
    ab.transform = AffineTransform::Reflection;
    ab.edge_only = true;
    ab.shift = ((k + 1) / av) * fundamental(v);
    transform = [&rd](const Weight& x) { return affine_reflect(rd, 0, x); };
  } else {
    ab.diagram = affine_automorphism_swapping(rd, v + 1);
    ab.shift = (k / av) * fundamental(v);
    if (ab.diagram) {
      ab.transform = AffineTransform::DiagramMap;
      const DiagramMap dm = *ab.diagram;
      transform = [dm](const Weight& x) { return dm.apply(x); };
    } else {
      ab.transform = AffineTransform::Reflection;
      transform = [&rd](const Weight& x) { return affine_reflect(rd, 0, x); };
    }
  }
  for (const auto& e : ab.base.entries) ab.ab_e.push_back(transform(e.basis_weight) + ab.shift);
  if (!ab.edge_only)
    for (const Weight& x : ab.ab_e)
      if (in_vertex_chamber(rd, v, k, x)) ab.ab_v.push_back(x);
  return ab;
}

}  // namespace fusionring
