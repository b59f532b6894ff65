#pragma once

#include "propunit/core.hpp"

#include <cstdint>
#include <iosfwd>

namespace propunit {

struct SweepStats {
  std::uint64_t graphs = 0;
  std::uint64_t unit_feasible = 0;       // oracle: unit_rep_feasible succeeded
  std::uint64_t interval = 0;            // oracle: interval_rep_brute succeeded
  std::uint64_t clawed = 0;              // find_claw hit
  std::uint64_t to_unit_ok = 0;          // pipeline produced a unit representation
  std::uint64_t disagreements = 0;       // the three predicates did not agree
  std::uint64_t soundness_failures = 0;  // a successful output failed verification
  std::uint64_t witness_failures = 0;    // a returned claw failed verification
  SweepStats& operator+=(const SweepStats& o);
  bool clean() const {
    return disagreements == 0 && soundness_failures == 0 && witness_failures == 0;
  }
};

// Cross-validates, on every labeled graph with n vertices:
//   A = unit_rep_feasible succeeds,
//   B = interval_rep_brute succeeds and find_claw is empty,
//   C = interval_rep_brute succeeds and to_unit reaches a unit representation.
// Successful outputs are re-verified (length-1 intervals, exact graph match);
// claw-carrying interval graphs must make to_unit return a verifying witness.
// lines, when non-null, receives one
//   "<id> A=<0|1> B=<0|1> C=<0|1> to_unit=<unit|claw|skip> agree=<0|1>"
// record per graph, in graph-id order. jobs > 1 splits the id space into
// chunks processed by worker threads and merged back deterministically.
SweepStats run_sweep(int n, int jobs = 1, std::ostream* lines = nullptr, int cap = 7);

}  // namespace propunit
