#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fusionring/fusion.hpp"
#include "fusionring/ideal.hpp"
#include "fusionring/serialize.hpp"
#include "fusionring/verify.hpp"

using namespace fusionring;

namespace {

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kUsage = 2;

struct Options {
  std::string type;
  int level = 0;
  std::string source = "table";
  std::string format = "text";
  bool experimental = false;
  bool table = false;
  double tolerance = 1e-6;
  int vertex = 0;
  int truncation = 0;
  bool timing = false;
  bool seedless = false;
  bool all = false, oracle = false, vanish = false, ideal_eq = false, pipeline = false, kernels = false,
       steinberg = false;
};

int run_ideal(const Options& o, bool derive_only) {
  const RootDatum& rd = root_datum(parse_lie_type(o.type));
  if (derive_only || o.source == "derive") {
    DerivationTrace trace;
    const GeneratorSet gs = derive_fusion_ideal(rd, o.level, &trace);
    if (o.format == "json") {
      std::cout << generators_json(rd, gs);
    } else {
      if (derive_only) {
        std::cout << affine_steinberg_text(rd, trace.basis);
        const auto& kg = trace.kernel;
        std::cout << "# kernel " << trace.kernel_routine << ": " << kg.elements.size() << " elements";
        for (auto c : {KernelClass::Singular, KernelClass::Paired, KernelClass::CentralPaired,
                       KernelClass::OrthogonalPaired, KernelClass::ProjectedSingular})
          if (kg.count(c)) std::cout << ", " << to_string(c) << " " << kg.count(c);
        std::cout << "\n";
      }
      std::cout << generators_text(rd, gs);
    }
    return kOk;
  }
  const GeneratorSet gs = tabulated_generators(rd, o.level, o.experimental);
  std::cout << (o.format == "json" ? generators_json(rd, gs) : generators_text(rd, gs));
  return kOk;
}

int run_fusion(const Options& o) {
  const RootDatum& rd = root_datum(parse_lie_type(o.type));
  if (!o.table) throw CLI::ValidationError("fusion", "--table is required");
  const auto alcove = enumerate_alcove(rd, o.level);
  const auto n = kac_walton_table(rd, o.level);
  std::cout << (o.format == "json" ? fusion_table_json(rd, o.level, alcove, n) : fusion_table_tsv(rd, alcove, n));
  return kOk;
}

int run_steinberg(const Options& o) {
  const RootDatum& rd = root_datum(parse_lie_type(o.type));
  const int v = o.vertex > 0 ? o.vertex - 1 : default_vertex(rd.type);
  if (v >= rd.n) throw CLI::ValidationError("--vertex", "node out of range");
  if (o.level > 0) {
    const auto ab = affine_steinberg_basis(rd, v, o.level);
    std::cout << (o.format == "json" ? affine_steinberg_json(rd, ab) : affine_steinberg_text(rd, ab));
  } else {
    const auto sb = steinberg_basis(rd, complement_of(rd, v));
    std::cout << (o.format == "json" ? steinberg_json(rd, sb) : steinberg_text(rd, sb));
  }
  return kOk;
}

int run_verify(const Options& o) {
  const RootDatum& rd = root_datum(parse_lie_type(o.type));
  const int k = o.level;
  const bool any = o.oracle || o.vanish || o.ideal_eq || o.pipeline || o.kernels || o.steinberg;
  const bool all = o.all || !any;
  std::vector<VerifyJob> jobs;
  if (all || o.oracle) jobs.push_back([&] { return verify_oracle(rd, k, o.tolerance); });
  if (all || o.vanish) jobs.push_back([&] { return verify_vanish(rd, k); });
  if (all || o.ideal_eq)
    jobs.push_back([&] {
      return verify_ideal_equality(rd, k, o.truncation > 0 ? std::optional<int>(o.truncation) : std::nullopt);
    });
  if (all || o.pipeline) jobs.push_back([&] { return verify_pipeline(rd, k); });
  if (all || o.kernels) jobs.push_back([&] { return verify_kernels(rd, k); });
  if (all || o.steinberg) jobs.push_back([&] { return verify_steinberg(rd); });
  const auto reports = run_jobs(jobs, configured_threads());
  const bool timing = o.timing && !o.seedless;
  std::cout << (o.format == "json" ? reports_json(reports, timing) : reports_text(reports, timing));
  for (const auto& r : reports)
    if (r.status == Status::Fail) return kFailure;
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact fusion rings of simple simply connected Lie groups"};
  app.require_subcommand(1);
  Options o;
  app.add_flag("--seedless", o.seedless, "Byte-identical output across runs; overrides --timing");

  auto add_type = [&](CLI::App* sub) {
    sub->add_option("type", o.type, "Lie type with rank, e.g. A2, G2, E8")->required();
  };
  auto add_level = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("-k,--level", o.level, "Level k")->check(CLI::PositiveNumber);
    if (required) opt->required();
  };

  auto* ideal = app.add_subcommand("ideal", "Fusion-ideal generators");
  add_type(ideal);
  add_level(ideal, true);
  ideal->add_option("--source", o.source, "derive or table")->check(CLI::IsMember({"derive", "table"}));
  ideal->add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  ideal->add_flag("--experimental", o.experimental, "Allow tabulated generators below the supported level");

  auto* derive = app.add_subcommand("derive", "Run the derivation pipeline and show its stages");
  add_type(derive);
  add_level(derive, true);
  derive->add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));

  auto* fusion = app.add_subcommand("fusion", "Fusion coefficients over the level-k alcove");
  add_type(fusion);
  add_level(fusion, true);
  fusion->add_flag("--table", o.table, "Print the full coefficient table");
  fusion->add_option("--format", o.format, "tsv or json")->check(CLI::IsMember({"json", "tsv", "text"}));

  auto* stein = app.add_subcommand("steinberg", "Steinberg basis, or the affine basis when a level is given");
  add_type(stein);
  add_level(stein, false);
  stein->add_option("--vertex", o.vertex, "Node (1-based) removed from the parabolic; default per type");
  stein->add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));

  auto* verify = app.add_subcommand("verify", "Run verification checks");
  add_type(verify);
  add_level(verify, true);
  verify->add_flag("--all", o.all, "All checks (default)");
  verify->add_flag("--oracle", o.oracle, "Kac-Walton against Verlinde");
  verify->add_flag("--vanish", o.vanish, "Tabulated generators reduce to zero");
  verify->add_flag("--ideal-equality", o.ideal_eq, "Truncated lattice equality");
  verify->add_flag("--pipeline", o.pipeline, "Derived generators equal the tabulated ones");
  verify->add_flag("--kernels", o.kernels, "Kernel elements map to zero at the vertex");
  verify->add_flag("--steinberg", o.steinberg, "Positive Weyl group invariants");
  verify->add_option("--truncation", o.truncation, "Truncation level L for --ideal-equality");
  verify->add_option("--tolerance", o.tolerance, "Verlinde rounding tolerance")->check(CLI::PositiveNumber);
  verify->add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  verify->add_flag("--timing", o.timing, "Include wall times");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }
  try {
    if (*ideal) return run_ideal(o, false);
    if (*derive) return run_ideal(o, true);
    if (*fusion) return run_fusion(o);
    if (*stein) return run_steinberg(o);
    if (*verify) return run_verify(o);
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailure;
  }
  return kUsage;
}
