// Independent brute-force oracles and the verification battery.
//
// The oracles share no code path with the production algorithms they check:
// kl_by_bar_solve builds the Kazhdan-Lusztig basis directly from its defining
// bar-invariance and triangularity properties (no mu-recursion), and
// bruhat_by_subword decides Bruhat order by enumerating reduced words and
// taking subwords.  verify_suite runs a registry of named identity checks
// covering every displayed formula the library implements.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "heckecat/coxeter.hpp"
#include "heckecat/hecke.hpp"

namespace heckecat {

inline constexpr std::uint64_t kDefaultSeed = 12345;

// uH_w from first principles: start at H_w and, walking y < w by decreasing
// length, add the unique correction in v Z[v] making every coordinate of the
// bar image match.  Throws NoSolution if no such correction exists (which
// would signal a bug elsewhere, never bad input).
HeckeElement kl_by_bar_solve(const CoxeterGroup& g, Element w);

// True iff a is a subword of some reduced expression of b.  Enumerates all
// reduced words of b, so it is capped at l(b) <= 12 (TooLong beyond).
bool bruhat_by_subword(const CoxeterGroup& g, Element a, Element b);

struct CheckResult {
  std::string name;
  std::uint64_t instances = 0;
  bool passed = false;
  std::string counterexample;  // non-empty exactly when the check failed
  std::string note;            // informational diagnostics, never a failure
};

struct VerificationReport {
  CartanType group;
  std::uint64_t seed = kDefaultSeed;
  std::vector<CheckResult> checks;

  bool all_passed() const {
    for (const auto& c : checks) {
      if (!c.passed) return false;
    }
    return true;
  }
};

// Names of every registered check, in the order verify_suite runs them.
const std::vector<std::string>& check_names();

// Runs a single named check.  Exhaustive on small groups; checks with a
// quadratic or cubic instance space fall back to seeded random sampling on
// larger groups and say so in their note.  Unknown names throw Error.
CheckResult run_check(const std::string& name, const CoxeterGroup& g,
                      KLCache& kl, std::uint64_t seed = kDefaultSeed);

// Runs every check (or the named subset, in registry order) and aggregates
// the results.  Failures are recorded in the report, never thrown.
VerificationReport verify_suite(const CoxeterGroup& g, KLCache& kl,
                                const std::vector<std::string>& filter = {},
                                std::uint64_t seed = kDefaultSeed);

}  // namespace heckecat
