#include "fusionring/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <set>
#include <sstream>
#include <thread>
#include <unordered_map>

#include "fusionring/fusion.hpp"
#include "fusionring/lattice.hpp"

namespace fusionring {

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Skipped: return "skipped";
  }
  return "?";
}

std::string VerifyReport::get(const std::string& key) const {
  for (const auto& [k, v] : details)
    if (k == key) return v;
  return {};
}

namespace {

using Clock = std::chrono::steady_clock;

VerifyReport start(const RootDatum& rd, int k, const std::string& check, const std::string& reproduce) {
  VerifyReport r;
  r.type = rd.name();
  r.level = k;
  r.check = check;
  r.reproduce = reproduce;
  return r;
}

std::string cli(const RootDatum& rd, int k, const std::string& flag) {
  return "fusionring verify " + rd.name() + " --level " + std::to_string(k) + " " + flag;
}

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

template <typename T>
std::string str(const T& x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

}  // namespace

VerifyReport verify_oracle(const RootDatum& rd, int k, double tolerance) {
  const auto t0 = Clock::now();
  VerifyReport r = start(rd, k, "oracle", cli(rd, k, "--oracle"));
  try {
    VerlindeOptions opt;
    opt.tolerance = tolerance;
    const SMatrix sm = s_matrix(rd, k, opt);
    double residual = 0;
    const auto verlinde = verlinde_table(sm, tolerance, &residual);
    const auto kw = kac_walton_table(rd, k);
    const std::size_t n = sm.alcove.size();
    std::size_t mismatches = 0;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c)
          if (verlinde[a][b][c] != kw[a][b][c]) {
            if (++mismatches <= 5)
              r.fail("N(" + to_string(sm.alcove[a], rd.n) + "," + to_string(sm.alcove[b], rd.n) + ";" +
                     to_string(sm.alcove[c], rd.n) + "): Kac-Walton " + std::to_string(kw[a][b][c]) +
                     ", Verlinde " + std::to_string(verlinde[a][b][c]));
          }
    r.detail("alcove_size", std::to_string(n));
    r.detail("triples", std::to_string(n * n * n));
    r.detail("max_rounding_residual", str(residual));
    r.detail("unitarity_residual", str(sm.unitarity_residual()));
    r.detail("mismatches", std::to_string(mismatches));
  } catch (const CapacityError& e) {
    r.status = Status::Skipped;
    r.detail("reason", e.what());
  } catch (const OracleFailure& e) {
    r.fail(e.what());
  }
  r.wall_seconds = seconds_since(t0);
  return r;
}

VerifyReport verify_vanish(const RootDatum& rd, int k) {
  const auto t0 = Clock::now();
  VerifyReport r = start(rd, k, "vanish", cli(rd, k, "--vanish"));
  GeneratorSet gs;
  try {
    gs = tabulated_generators(rd, k);
  } catch (const UnsupportedCase& e) {
    r.status = Status::Skipped;
    r.detail("reason", e.what());
    r.wall_seconds = seconds_since(t0);
    return r;
  }
  std::size_t terms = 0;
  for (std::size_t i = 0; i < gs.generators.size(); ++i) {
    const auto& g = gs.generators[i];
    terms += g.size();
    const FusionElement f = fusion_reduce(rd, g, k);
    if (!f.is_zero())
      r.fail("generator " + std::to_string(i + 1) + " = " + to_string(rd, g) + " reduces to " +
             to_string(rd, lift(f)));
  }
  r.detail("generators", std::to_string(gs.generators.size()));
  r.detail("expanded_terms", std::to_string(terms));
  r.detail("source", gs.source_tag);
  r.wall_seconds = seconds_since(t0);
  return r;
}

VerifyReport verify_ideal_equality(const RootDatum& rd, int k, std::optional<int> L, std::size_t max_rows) {
  GeneratorSet gs;
  try {
    gs = tabulated_generators(rd, k);
  } catch (const UnsupportedCase& e) {
    VerifyReport r = start(rd, k, "ideal-equality", cli(rd, k, "--ideal-equality"));
    r.status = Status::Skipped;
    r.detail("reason", e.what());
    return r;
  }
  return verify_ideal_equality(rd, k, gs.generators, L, max_rows);
}

VerifyReport verify_ideal_equality(const RootDatum& rd, int k, const std::vector<VirtualCharacter>& generators,
                                   std::optional<int> L_opt, std::size_t max_rows) {
  const auto t0 = Clock::now();
  const int L = L_opt.value_or(k + 2 * rd.dual_coxeter + 2);
  const int Lp = L - 2 * rd.dual_coxeter;
  VerifyReport r = start(rd, k, "ideal-equality", cli(rd, k, "--ideal-equality --truncation " + std::to_string(L)));
  r.detail("L", std::to_string(L));
  r.detail("L_low", std::to_string(Lp));
  auto skip = [&](const std::string& why) {
    r.status = Status::Skipped;
    r.detail("reason", why);
    r.wall_seconds = seconds_since(t0);
    return r;
  };
  if (Lp <= k) return skip("truncation too small: L - 2h^vee must exceed k");

  // Columns: dominant weights of level <= L, canonical order descending.
  auto cols = enumerate_alcove(rd, L);
  std::reverse(cols.begin(), cols.end());
  std::unordered_map<Weight, std::size_t, WeightHash> index;
  for (std::size_t i = 0; i < cols.size(); ++i) index.emplace(cols[i], i);
  auto to_row = [&](const VirtualCharacter& x) {
    SparseRow row;
    for (const auto& [w, c] : x.terms) {
      auto it = index.find(w);
      if (it == index.end()) throw std::logic_error("term " + to_string(w, rd.n) + " above truncation level");
      row.emplace_back(it->second, c);
    }
    std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return row;
  };

  std::vector<std::pair<Weight, const VirtualCharacter*>> products;
  for (const auto& g : generators) {
    int top = 0;
    for (const auto& [w, c] : g.terms) top = std::max(top, rd.level(w));
    if (top > L) continue;
    for (const Weight& mu : enumerate_alcove(rd, L - top)) products.emplace_back(mu, &g);
  }
  if (products.size() > max_rows) return skip("capacity: " + std::to_string(products.size()) + " rows");

  LatticeEchelon ideal;
  for (const auto& [mu, g] : products) ideal.insert(to_row(tensor(rd, irreducible(mu), *g)));

  std::size_t missing = 0;
  const auto classical_low = classical_ideal_truncation(rd, k, Lp);
  for (const auto& x : classical_low)
    if (!ideal.contains(to_row(x)) && ++missing <= 5)
      r.fail("classical element " + to_string(rd, x) + " is not in the span of generator multiples");

  LatticeEchelon classical;
  for (const auto& x : classical_ideal_truncation(rd, k, L)) classical.insert(to_row(x));
  for (std::size_t i = 0; i < generators.size(); ++i)
    if (!classical.contains(to_row(generators[i])))
      r.fail("generator " + std::to_string(i + 1) + " = " + to_string(rd, generators[i]) +
             " is not in the classical lattice");

  std::size_t low_rank = 0;
  Integer max_pivot = 0;
  for (const auto& [col, row] : ideal.pivots()) {
    if (rd.level(cols[col]) > Lp) continue;
    ++low_rank;
    const Integer p = abs(row.front().second);
    if (p > max_pivot) max_pivot = p;
    if (p != 1) r.fail("pivot " + p.str() + " at " + to_string(cols[col], rd.n) + " gives torsion");
  }
  const std::size_t low_cols = enumerate_alcove(rd, Lp).size();
  const std::size_t quotient = low_cols - low_rank;
  const std::size_t alcove = enumerate_alcove(rd, k).size();
  if (quotient != alcove)
    r.fail("quotient free rank " + std::to_string(quotient) + " differs from alcove size " + std::to_string(alcove));
  r.detail("generators", std::to_string(generators.size()));
  r.detail("rows", std::to_string(products.size()));
  r.detail("columns", std::to_string(cols.size()));
  r.detail("lattice_rank", std::to_string(ideal.rank()));
  r.detail("low_block_rank", std::to_string(low_rank));
  r.detail("classical_low_elements", std::to_string(classical_low.size()));
  r.detail("max_low_pivot", max_pivot.str());
  r.detail("quotient_rank", std::to_string(quotient));
  r.detail("alcove_size", std::to_string(alcove));
  r.wall_seconds = seconds_since(t0);
  return r;
}

namespace {

// (term count, sorted term levels) per generator, sorted.
std::vector<std::vector<int>> structure_signature(const RootDatum& rd, const std::vector<VirtualCharacter>& xs) {
  std::vector<std::vector<int>> sig;
  for (const auto& x : xs) {
    std::vector<int> levels;
    for (const auto& [w, c] : x.terms) levels.push_back(rd.level(w));
    std::sort(levels.begin(), levels.end());
    levels.insert(levels.begin(), static_cast<int>(x.size()));
    sig.push_back(std::move(levels));
  }
  std::sort(sig.begin(), sig.end());
  return sig;
}

}  // namespace

VerifyReport verify_pipeline(const RootDatum& rd, int k) {
  const auto t0 = Clock::now();
  VerifyReport r = start(rd, k, "pipeline", cli(rd, k, "--pipeline"));
  GeneratorSet derived, table;
  DerivationTrace trace;
  try {
    table = tabulated_generators(rd, k);
    derived = derive_fusion_ideal(rd, k, &trace);
  } catch (const UnsupportedCase& e) {
    r.status = Status::Skipped;
    r.detail("reason", e.what());
    r.wall_seconds = seconds_since(t0);
    return r;
  }
  const auto a = canonical_multiset(rd, derived.generators);
  const auto b = canonical_multiset(rd, table.generators);
  r.detail("kernel", trace.kernel_routine);
  r.detail("derived_generators", std::to_string(a.size()));
  r.detail("table_generators", std::to_string(b.size()));
  if (a != b) {
    std::size_t shown = 0;
    for (const auto& x : a)
      if (std::find(b.begin(), b.end(), x) == b.end() && shown++ < 4) r.fail("only derived: " + to_string(rd, x));
    shown = 0;
    for (const auto& x : b)
      if (std::find(a.begin(), a.end(), x) == a.end() && shown++ < 4) r.fail("only table: " + to_string(rd, x));
    if (r.counterexamples.empty()) r.fail("multiplicities differ");
  }
  if (structure_signature(rd, a) != structure_signature(rd, b)) r.fail("term counts / levels differ");

  if (rd.type.family == Family::E && rd.n == 8) {
    const auto& kg = trace.kernel;
    auto expect = [&](const std::string& name, std::size_t got, std::size_t want) {
      r.detail(name, std::to_string(got));
      if (got != want) r.fail(name + " = " + std::to_string(got) + ", expected " + std::to_string(want));
    };
    if (k % 2 == 0) {
      expect("singular_weights", kg.count(KernelClass::Singular), 8);
      expect("paired_weights", kg.count(KernelClass::Paired), 112);
    } else {
      expect("projected_weights", kg.projected_count, 54);
      expect("singular_weights", kg.singular_count, 44);
      expect("reflecting_weights", kg.reflecting_count, 35);
      expect("paired_elements", kg.pair_count, 161);
    }
  }
  r.wall_seconds = seconds_since(t0);
  return r;
}

VerifyReport verify_kernels(const RootDatum& rd, int k) {
  const auto t0 = Clock::now();
  VerifyReport r = start(rd, k, "kernel-soundness", cli(rd, k, "--kernels"));
  DerivationTrace trace;
  try {
    derive_fusion_ideal(rd, k, &trace);
  } catch (const UnsupportedCase& e) {
    r.status = Status::Skipped;
    r.detail("reason", e.what());
    r.wall_seconds = seconds_since(t0);
    return r;
  }
  const auto& kg = trace.kernel;
  for (const auto& e : kg.elements) {
    const VirtualCharacter img = vertex_image(rd, e, kg.vertex, kg.level);
    if (!img.is_zero())
      r.fail(to_string(e.kind) + " element from " + to_string(e.source, rd.n) + " maps to " + to_string(rd, img));
  }
  r.detail("kernel", trace.kernel_routine);
  r.detail("elements", std::to_string(kg.elements.size()));
  r.detail("ab_e", std::to_string(trace.basis.ab_e.size()));
  r.detail("ab_v", std::to_string(trace.basis.ab_v.size()));
  r.wall_seconds = seconds_since(t0);
  return r;
}

VerifyReport verify_steinberg(const RootDatum& rd) {
  const auto t0 = Clock::now();
  VerifyReport r = start(rd, 0, "steinberg", "fusionring verify " + rd.name() + " --level 1 --steinberg");
  const Integer order = weyl_group_order(rd, all_nodes(rd));
  r.detail("weyl_order", order.str());
  std::string counts;
  for (int v = 0; v < rd.n; ++v) {
    const uint32_t S = complement_of(rd, v);
    const SteinbergBasis sb = steinberg_basis(rd, S);
    const Integer sub = weyl_group_order(rd, S);
    if (Integer(sb.entries.size()) * sub != order)
      r.fail("node " + std::to_string(v + 1) + ": |W^S| = " + std::to_string(sb.entries.size()) + " times |W_S| = " +
             sub.str() + " is not |W|");
    if (!counts.empty()) counts += ",";
    counts += std::to_string(sb.entries.size());
    std::set<Weight> basis;
    std::size_t bad = 0;
    for (const auto& e : sb.entries) {
      const Weight wr = apply_word(rd, e.word, rd.rho);
      int inversions = 0;
      for (const auto& beta : rd.positive_roots)
        if (rd.ip_scaled(wr, beta) < 0) ++inversions;
      bool ok = inversions == static_cast<int>(e.word.size());
      for (int j = 0; j < rd.n && ok; ++j)
        if ((S >> j & 1u) && !rd.is_positive_root(apply_word(rd, e.word, rd.simple_roots[j]))) ok = false;
      for (int j = 0; j < rd.n && ok; ++j)
        if ((S >> j & 1u) && e.basis_weight[j] < 0) ok = false;
      if (!basis.insert(e.basis_weight).second) ok = false;
      if (!ok && ++bad <= 3) r.fail("node " + std::to_string(v + 1) + ": word " + word_to_string(e.word) + " fails");
    }
  }
  r.detail("coset_counts", counts);
  r.wall_seconds = seconds_since(t0);
  return r;
}

std::vector<VerifyReport> run_jobs(const std::vector<VerifyJob>& jobs, unsigned threads) {
  std::vector<VerifyReport> out(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) {
      try {
        out[i] = jobs[i]();
      } catch (const std::exception& e) {
        out[i].check = "job " + std::to_string(i);
        out[i].fail(std::string("exception: ") + e.what());
      }
    }
  };
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(jobs.size())));
  if (threads == 1) {
    worker();
    return out;
  }
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  return out;
}

unsigned configured_threads() {
  if (const char* env = std::getenv("FUSIONRING_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace fusionring
