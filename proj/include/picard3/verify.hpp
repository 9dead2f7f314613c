#pragma once

#include "picard3/clifford.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace picard3 {

struct VerifyOptions {
  std::int64_t trials = 20;
  std::uint64_t seed = 1;
  std::int64_t gram_bound = 5;
};

struct SuiteResult {
  std::string name;
  std::int64_t checks = 0;
  std::int64_t failures = 0;
  std::vector<std::string> messages;  // first few failures
  bool ok() const { return failures == 0; }
};

// Uniform parameters in [-bound, bound], resampled until non-degenerate.
GramParams random_gram_params(std::mt19937_64& rng, std::int64_t bound);
EvenCliffordElement random_even(std::mt19937_64& rng, std::int64_t bound);
OddCliffordElement random_odd(std::mt19937_64& rng, std::int64_t bound);

// Clifford identities: E central, E* = -E, E^2 = -D0, alternating E, Q_B, Phi, norms, pairing, odd Gram.
SuiteResult verify_clifford(const VerifyOptions& options);
// P+-, mu, mu~ identities and the conjugation identity on random Gram tuples.
SuiteResult verify_exterior(const VerifyOptions& options);
// Units -> isometries -> lifts on the U(k)+<2l> families, plus kernel membership.
SuiteResult verify_roundtrip(const VerifyOptions& options);

const std::vector<std::string>& suite_names();
// Throws std::invalid_argument for unknown names.
SuiteResult run_suite(const std::string& name, const VerifyOptions& options);

}  // namespace picard3
