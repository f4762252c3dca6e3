#include <algorithm>

#include "fusionring/ideal.hpp"
#include "tables.hpp"

namespace fusionring {

namespace {

std::string parity_tag(int k) { return k % 2 == 0 ? "even" : "odd"; }

std::vector<VirtualCharacter> classical_rows(const RootDatum& rd, int k) {
  const int n = rd.n;
  // Weight a*lambda_1 + sum of the listed (node, coefficient) pairs, 1-based nodes.
  auto wt = [&](std::initializer_list<std::pair<int, int>> parts) {
    Weight w;
    for (const auto& [node, c] : parts) w[node - 1] += c;
    return w;
  };
  std::vector<VirtualCharacter> g;
  auto one = [&](const Weight& w) { g.push_back(irreducible(w)); };
  auto two = [&](const Weight& a, const Weight& b) {
    VirtualCharacter x = irreducible(a);
    x.add(b, 1);
    g.push_back(x);
  };
  switch (rd.type.family) {
    case Family::A:
    case Family::C:
      for (int j = n; j >= 2; --j) one(wt({{1, k}, {j, 1}}));
      one(wt({{1, k + 1}}));
      break;
    case Family::B:
      for (int j = 2; j <= n - 1; ++j) one(wt({{1, k - 1}, {j, 1}}));
      one(wt({{1, k - 1}, {n, 2}}));
      for (int j = n; j >= 3; --j) one(wt({{1, k}, {j, 1}}));
      two(wt({{1, k}, {2, 1}}), wt({{1, k}}));
      one(wt({{1, k + 1}}));
      break;
    case Family::D:
      for (int j = 2; j <= n - 2; ++j) one(wt({{1, k - 1}, {j, 1}}));
      one(wt({{1, k - 1}, {n - 1, 1}, {n, 1}}));
      one(wt({{1, k}, {n, 1}}));
      one(wt({{1, k}, {n - 1, 1}}));
      one(wt({{1, k}, {n - 1, 1}, {n, 1}}));
      for (int j = n - 2; j >= 3; --j) one(wt({{1, k}, {j, 1}}));
      two(wt({{1, k}, {2, 1}}), wt({{1, k}}));
      one(wt({{1, k + 1}}));
      break;
    default:
      break;
  }
  return g;
}

}  // namespace

std::vector<VirtualCharacter> canonical_multiset(const RootDatum& rd, const std::vector<VirtualCharacter>& xs) {
  std::vector<VirtualCharacter> out;
  out.reserve(xs.size());
  for (const auto& x : xs) out.push_back(sign_normalized(rd, x));
  std::sort(out.begin(), out.end(),
            [&](const VirtualCharacter& a, const VirtualCharacter& b) { return character_less(rd, a, b); });
  return out;
}

GeneratorSet derive_fusion_ideal(const RootDatum& rd, int k, DerivationTrace* trace) {
  const LieType t = rd.type;
  const int v = default_vertex(t);
  DerivationTrace local;
  DerivationTrace& tr = trace ? *trace : local;
  tr.basis = affine_steinberg_basis(rd, v, k);
  if (t.family == Family::E && t.rank != 8) {
    tr.kernel_routine = "central-vertex";
    tr.kernel = kernel_central_vertex(rd, tr.basis);
  } else if (t.family == Family::F || (t.family == Family::E && k % 2 == 1)) {
    tr.kernel_routine = "orthogonal-edge";
    tr.kernel = kernel_orthogonal_edge(rd, v, tr.basis.ab_e, k);
  } else {
    tr.kernel_routine = "induction-closed";
    tr.kernel = kernel_induction_closed(rd, tr.basis);
  }
  GeneratorSet gs;
  gs.type = t;
  gs.level = k;
  gs.provenance = Provenance::Derived;
  gs.source_tag = "derived:" + tr.kernel_routine;
  std::vector<VirtualCharacter> seen;
  for (const auto& e : tr.kernel.elements) {
    VirtualCharacter g = induct_kernel_element(rd, e);
    if (g.is_zero()) continue;
    g = sign_normalized(rd, g);
    if (std::find(seen.begin(), seen.end(), g) != seen.end()) continue;
    seen.push_back(g);
    gs.generators.push_back(std::move(g));
  }
  return gs;
}

int tabulated_min_level(LieType t) {
  switch (t.family) {
    case Family::F: return 6;
    case Family::E: return t.rank == 6 ? 2 : t.rank == 7 ? 4 : 20;
    default: return 1;
  }
}

GeneratorSet tabulated_generators(const RootDatum& rd, int k, bool experimental) {
  const LieType t = rd.type;
  if (k < 1) throw UnsupportedCase("level must be >= 1");
  const int min_level = tabulated_min_level(t);
  if (k < min_level && !experimental)
    throw UnsupportedCase("tabulated generators for " + rd.name() + " require k >= " + std::to_string(min_level) +
                          " (got " + std::to_string(k) + "); pass the experimental flag to straighten anyway");
  GeneratorSet gs;
  gs.type = t;
  gs.level = k;
  gs.provenance = Provenance::Table;
  gs.golden = k >= min_level;
  const auto finite = ReflectionGroupSpec::finite();

  // Terms with a coordinate -1 vanish; anything lower needs the experimental
  // straightening of errant weights.
  auto induct_term = [&](const Weight& w) {
    for (int i = 0; i < rd.n; ++i)
      if (w[i] < -1 && !experimental)
        throw std::logic_error("table term " + to_string(w, rd.n) + " leaves the dominant chamber");
    return straighten(rd, w, finite);
  };

  std::vector<VirtualCharacter> raw;
  const auto table = table_rows(t, k);
  if (table.empty()) {
    gs.source_tag = std::string("rows:") + family_letter(t.family);
    raw = classical_rows(rd, k);
  } else {
    gs.source_tag = "table:" + rd.name() + (t.family == Family::E && t.rank != 8 ? "" : "-" + parity_tag(k));
    Weight nu, mu;
    nu[0] = k;
    mu[rd.n - 1] = k;
    for (const auto& row : table) {
      VirtualCharacter g;
      for (const auto& term : detail::parse_row(row, k, rd.n)) {
        const SignedWeight s = induct_term(term.weight);
        if (s.sign == 0) continue;
        if (term.factor == detail::Factor::None) {
          g.add(s.weight, term.sign * s.sign);
        } else {
          const Weight& f = term.factor == detail::Factor::Nu ? nu : mu;
          g += Integer(term.sign * s.sign) * tensor_irreducibles(rd, s.weight, f);
        }
      }
      raw.push_back(std::move(g));
    }
  }
  for (auto& g : raw) {
    // Classical rows are dominant already; straighten for uniformity.
    VirtualCharacter h = induct_to_G(rd, g);
    if (!h.is_zero()) gs.generators.push_back(std::move(h));
  }
  return gs;
}

std::vector<VirtualCharacter> classical_ideal_truncation(const RootDatum& rd, int k, int L) {
  if (k < 1) throw std::invalid_argument("level must be >= 1");
  std::vector<VirtualCharacter> out;
  const auto g = ReflectionGroupSpec::affine(k + rd.dual_coxeter);
  for (const Weight& lambda : dominant_weights_in_levels(rd, k, L)) {
    const SignedWeight s = straighten(rd, lambda, g);
    VirtualCharacter x = irreducible(lambda);
    if (s.sign != 0) x.add(s.weight, -s.sign);
    out.push_back(std::move(x));
  }
  return out;
}

}  // namespace fusionring
