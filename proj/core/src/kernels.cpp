#include <algorithm>
#include <set>

#include "fusionring/ideal.hpp"

namespace fusionring {

std::string to_string(KernelClass c) {
  switch (c) {
    case KernelClass::Singular: return "singular";
    case KernelClass::Paired: return "paired";
    case KernelClass::CentralPaired: return "central-paired";
    case KernelClass::OrthogonalPaired: return "orthogonal-paired";
    case KernelClass::ProjectedSingular: return "projected-singular";
  }
  return "?";
}

std::size_t KernelGenerators::count(KernelClass c) const {
  return static_cast<std::size_t>(
      std::count_if(elements.begin(), elements.end(), [c](const KernelElement& e) { return e.kind == c; }));
}

namespace {

KernelElement singular_element(const Weight& lambda, KernelClass kind = KernelClass::Singular) {
  KernelElement e;
  e.kind = kind;
  e.source = lambda;
  e.plain = irreducible(lambda, Chamber::Edge);
  return e;
}

std::vector<Weight> edge_minus_vertex(const AffineSteinbergBasis& ab) {
  std::vector<Weight> out;
  for (const Weight& x : ab.ab_e)
    if (std::find(ab.ab_v.begin(), ab.ab_v.end(), x) == ab.ab_v.end()) out.push_back(x);
  return out;
}

}  // namespace

KernelGenerators kernel_induction_closed(const RootDatum& rd, const AffineSteinbergBasis& ab) {
  if (ab.edge_only) throw std::invalid_argument("induction-closed kernel needs a vertex basis");
  KernelGenerators kg;
  kg.vertex = ab.vertex;
  kg.level = ab.level;
  const auto g = ReflectionGroupSpec::vertex_group(ab.vertex, ab.level);
  const std::set<Weight> abv(ab.ab_v.begin(), ab.ab_v.end());
  for (const Weight& lambda : edge_minus_vertex(ab)) {
    const SignedWeight s = straighten(rd, lambda, g);
    if (s.sign == 0) {
      kg.elements.push_back(singular_element(lambda));
      continue;
    }
    if (!abv.count(s.weight))
      throw ClosureViolation("weight " + to_string(lambda, rd.n) + " straightens to " + to_string(s.weight, rd.n) +
                             ", which is not in AB_v");
    KernelElement e;
    e.kind = KernelClass::Paired;
    e.source = lambda;
    e.partner = s.weight;
    e.sign = s.sign;
    e.plain = irreducible(lambda, Chamber::Edge);
    // [lambda]_e + (-1)^{|v|+1} [v.lambda]_e
    e.plain.add(s.weight, -s.sign);
    kg.elements.push_back(std::move(e));
  }
  return kg;
}

KernelGenerators kernel_central_vertex(const RootDatum& rd, const AffineSteinbergBasis& ab) {
  if (ab.ab_v.size() != 1)
    throw std::invalid_argument("central-vertex kernel needs |AB_v| = 1, got " + std::to_string(ab.ab_v.size()));
  KernelGenerators kg;
  kg.vertex = ab.vertex;
  kg.level = ab.level;
  kg.theta_v = ab.ab_v.front();
  const auto g = ReflectionGroupSpec::vertex_group(ab.vertex, ab.level);
  for (const Weight& lambda : edge_minus_vertex(ab)) {
    const SignedWeight s = straighten(rd, lambda, g);
    if (s.sign == 0) {
      kg.elements.push_back(singular_element(lambda));
      continue;
    }
    KernelElement e;
    e.kind = KernelClass::CentralPaired;
    e.source = lambda;
    e.partner = s.weight;
    e.sign = s.sign;
    e.plain = irreducible(lambda, Chamber::Edge);
    e.has_product = true;
    e.product_coeff = -s.sign;
    // w aligns C_v - theta with C: the dominant representative.
    e.product_character = dominant_conjugate(rd, s.weight - kg.theta_v);
    e.product_theta = kg.theta_v;
    kg.elements.push_back(std::move(e));
  }
  return kg;
}

KernelGenerators kernel_orthogonal_edge(const RootDatum& rd, int v, const std::vector<Weight>& basis, int k) {
  const int av = rd.comarks[v];
  if (av != 1 && av != 2)
    throw std::invalid_argument("orthogonal-edge kernel needs comark 1 or 2 at the vertex, got " +
                                std::to_string(av));
  // Projection step along lambda_v raising the level by 2.
  const Weight step = (2 / av) * fundamental(v);
  KernelGenerators kg;
  kg.vertex = v;
  kg.level = k;
  std::vector<Weight> projected;
  for (const Weight& lambda : basis) {
    const int L = rd.level(lambda);
    if (((k + 1 - L) % 2 + 2) % 2 != 0) continue;
    const Weight p = lambda + ((k + 1 - L) / 2) * step;
    if (std::find(projected.begin(), projected.end(), p) == projected.end()) projected.push_back(p);
  }
  kg.projected_count = projected.size();
  for (const Weight& p : projected) kg.elements.push_back(singular_element(p, KernelClass::ProjectedSingular));
  for (const Weight& lambda : basis)
    if (rd.level(lambda) == k + 1) {
      ++kg.singular_count;
      if (std::find(projected.begin(), projected.end(), lambda) == projected.end())
        kg.elements.push_back(singular_element(lambda));
    }
  std::set<std::pair<Weight, Weight>> seen;
  for (const Weight& lambda : basis) {
    if (rd.level(lambda) == k + 1) continue;
    const Weight mu = affine_reflect(rd, k + 1, lambda);
    const auto key = std::minmax(lambda, mu);
    if (!seen.insert(key).second) {
      ++kg.reflecting_count;
      continue;
    }
    KernelElement e;
    e.kind = KernelClass::OrthogonalPaired;
    e.source = lambda;
    e.partner = mu;
    e.sign = -1;
    e.plain = irreducible(lambda, Chamber::Edge);
    e.plain.add(mu, 1);
    kg.elements.push_back(std::move(e));
    ++kg.pair_count;
  }
  return kg;
}

VirtualCharacter vertex_image(const RootDatum& rd, const KernelElement& e, int v, int k) {
  const auto g = ReflectionGroupSpec::vertex_group(v, k);
  VirtualCharacter out;
  out.chamber = Chamber::Vertex;
  for (const auto& [w, c] : e.plain.terms) {
    const SignedWeight s = straighten(rd, w, g);
    if (s.sign != 0) out.add(s.weight, s.sign * c);
  }
  if (e.has_product) {
    // [chi] . [theta]_v: Brauer-Klimyk in the vertex module.
    for (const auto& [nu, m] : weight_system(rd, e.product_character).all) {
      const SignedWeight s = straighten(rd, e.product_theta + nu, g);
      if (s.sign != 0) out.add(s.weight, s.sign * m * e.product_coeff);
    }
  }
  return out;
}

VirtualCharacter induct_kernel_element(const RootDatum& rd, const KernelElement& e) {
  VirtualCharacter out = induct_to_G(rd, e.plain);
  out.chamber = Chamber::G;
  if (e.has_product)
    out += e.product_coeff * tensor_irreducibles(rd, e.product_character, e.product_theta);
  return out;
}

}  // namespace fusionring
