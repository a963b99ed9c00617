#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <exchci/ground.hpp>
#include <exchci/model.hpp>

namespace exchci {

struct VerifyOptions {
  std::string suite = "all";      // all | vector | network | appendix
  int nmax = 5;
  std::uint64_t seed = kDefaultSeed;
  int threads = 0;                // 0: hardware count; EXCHCI_THREADS caps
  std::vector<std::string> only;  // restrict to these check ids
};

struct VerifyResult {
  std::string id;
  std::string suite;
  bool pass = false;
  std::string detail;   // counterexample on failure, brief stats on pass
  double seconds = 0.0;
  std::string repro;    // self-contained reproduction command
};

struct CheckParams {
  int nmax = 5;
  std::uint64_t seed = kDefaultSeed;
};

// Accumulates a check's verdict.  All recorded failures are kept (up to a
// small cap) so a broken invariant names its counterexample directly.
struct CheckOutcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& text);
  void note(const std::string& text);
  void expect(bool ok, const std::string& text);

 private:
  int failures_ = 0;
};

using CheckFn = CheckOutcome (*)(const CheckParams&);

struct VerifyCheck {
  const char* id;
  const char* suite;
  int needs_n;  // smallest nmax the check requires; filtered out below it
  CheckFn fn;
};

// All registered checks, in fixed registration order.
const std::vector<VerifyCheck>& verify_checks();

// Runs the selected checks (suite + only + nmax filters), concurrently, and
// returns results in registration order.  Every result carries a
// reproduction command; exceptions inside a check become failures.
std::vector<VerifyResult> run_verify(const VerifyOptions& options);

// Seeded generators shared by checks, tests, and benchmarks.
IndependenceModel random_elementary_model(const GroundSet& ground,
                                          std::mt19937_64& rng, int statements);
IndependenceModel random_closed_model(const GroundSet& ground,
                                      std::mt19937_64& rng, int statements);
IndependenceModel random_exchangeable_model(const GroundSet& ground,
                                            std::mt19937_64& rng, int statements);

}  // namespace exchci
