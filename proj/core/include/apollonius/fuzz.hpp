#pragma once

#include <string>

#include "apollonius/generator.hpp"

namespace apo {

struct FuzzConfig {
  std::string predicate;  // incone, trisector, distance, existence, shadow,
                          // insphere, order, edge-conflict
  long count = 1000;      // instances to generate (after precondition filters)
  std::uint64_t seed = 1;
  GeneratorConfig gen;
  double guard = 1e-6;    // oracle decisive-margin guard
};

struct FuzzReport {
  long generated = 0;
  long compared = 0;
  long agreed = 0;
  long discarded = 0;   // oracle margin too small to trust
  long degenerate = 0;  // exact side reported a degenerate configuration
  int max_degree = 0;   // largest sign-test degree over the corpus
  int max_aux_orient_degree = 0;  // order's auxiliary orientation tests only
  std::string first_disagreement;  // empty when agreed == compared

  bool clean() const { return agreed == compared && first_disagreement.empty(); }
};

// Runs the exact predicate against the numeric oracle on seeded random
// instances. Deterministic per (predicate, seed, count).
FuzzReport run_fuzz(const FuzzConfig& config);

std::string format_report(const FuzzConfig& config, const FuzzReport& report);

}  // namespace apo
