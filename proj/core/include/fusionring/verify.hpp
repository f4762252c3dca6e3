#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fusionring/ideal.hpp"

namespace fusionring {

enum class Status { Pass, Fail, Skipped };
std::string to_string(Status s);

struct VerifyReport {
  std::string type;
  int level = 0;
  std::string check;
  Status status = Status::Pass;
  std::vector<std::pair<std::string, std::string>> details;  // insertion ordered
  std::vector<std::string> counterexamples;                  // non-empty on failure
  std::string reproduce;                                     // CLI sub-invocation
  double wall_seconds = 0;

  void detail(const std::string& key, const std::string& value) { details.emplace_back(key, value); }
  void fail(const std::string& counterexample) {
    status = Status::Fail;
    counterexamples.push_back(counterexample);
  }
  std::string get(const std::string& key) const;
};

// Kac-Walton against the Verlinde formula on every triple of alcove weights.
VerifyReport verify_oracle(const RootDatum& rd, int k, double tolerance = 1e-6);
// Every tabulated generator fusion-reduces to zero.
VerifyReport verify_vanish(const RootDatum& rd, int k);
// Truncated lattice equality of the tabulated generators and the classical
// generating set up to level L (default k + 2h^vee + 2).
VerifyReport verify_ideal_equality(const RootDatum& rd, int k, std::optional<int> L = std::nullopt,
                                   std::size_t max_rows = 50000);
// Same check for an explicit generator list.
VerifyReport verify_ideal_equality(const RootDatum& rd, int k, const std::vector<VirtualCharacter>& generators,
                                   std::optional<int> L = std::nullopt, std::size_t max_rows = 50000);
// Derived generators equal the tabulated ones as sign-normalized multisets;
// for E8 also the kernel statistics.
VerifyReport verify_pipeline(const RootDatum& rd, int k);
// Every kernel element maps to zero under d^{e,v}.
VerifyReport verify_kernels(const RootDatum& rd, int k);
// Positive Weyl group counts and invariants for every maximal parabolic.
VerifyReport verify_steinberg(const RootDatum& rd);

// Runs jobs on `threads` workers; reports come back in job order. A job
// that throws becomes a failed report carrying the message.
using VerifyJob = std::function<VerifyReport()>;
std::vector<VerifyReport> run_jobs(const std::vector<VerifyJob>& jobs, unsigned threads);
// FUSIONRING_THREADS if set and positive, else the hardware concurrency.
unsigned configured_threads();

}  // namespace fusionring
