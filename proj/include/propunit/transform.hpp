#pragma once

#include "propunit/core.hpp"

#include <variant>
#include <vector>

namespace propunit {

enum class ExtendDir { left, right };

// One interval extension: vertex's interval grew from `from` to `to`.
struct ProperizeStep {
  int vertex = -1;
  ExtendDir dir = ExtendDir::left;
  Interval from;
  Interval to;
};

struct ProperizeTrace {
  Representation start;  // the representation the steps apply to
  std::vector<ProperizeStep> steps;
};

struct ProperizeResult {
  Representation rep;
  ProperizeTrace trace;
};

using ProperizeOutcome = std::variant<ProperizeResult, ClawWitness>;

// Removes all proper containments by growing nested intervals, or returns a
// claw that obstructs it. Already-proper input comes back unchanged with an
// empty trace; anything else is canonicalized first (distinct endpoints), then
// extended one safe move at a time. A safe move grows a contained interval
// past its innermost container on a side whose window holds no other endpoint;
// it removes exactly one containment pair, creates none, and preserves both
// the intersection graph and the interval order.
ProperizeOutcome properize(const Representation& rep);

// Replays one recorded step (pure; used by step-level conservation checks).
Representation apply_properize_step(const Representation& rep, const ProperizeStep& s);

// One pivot adjustment of the unitize sweep. pivot_before = [a, b].
// expanded = true marks a zero-length pivot: every endpoint > a is shifted up
// by 1 and the whole class of intervals equal to [a, a] becomes [a, a+1].
// Otherwise the piecewise map fixes points <= alpha, sends [alpha, b]
// affinely onto [alpha, a+1], and shifts points > b by (a+1) - b.
struct SweepStep {
  int pivot = -1;
  Interval pivot_before;
  Rational alpha;
  bool expanded = false;
  std::vector<int> adjusted_after;  // ascending ids with length 1 after this step
};

struct UnitizeResult {
  Representation rep;
  std::vector<SweepStep> steps;
};

// Left-to-right sweep rescaling every interval to length exactly 1 while
// preserving the intersection graph and the interval order.
// Requires is_proper(rep); throws std::invalid_argument otherwise.
UnitizeResult unitize(const Representation& rep);

// Replays one sweep step (pure).
Representation apply_sweep_step(const Representation& rep, const SweepStep& s);

struct ToUnitResult {
  Representation rep;
  ProperizeTrace properize_trace;
  std::vector<SweepStep> sweep_steps;
};

using ToUnitOutcome = std::variant<ToUnitResult, ClawWitness>;

// Full pipeline: properize then unitize. rep must represent g exactly
// (std::invalid_argument otherwise). Claw-free inputs yield a unit
// representation of g; otherwise the obstructing claw is returned.
ToUnitOutcome to_unit(const Graph& g, const Representation& rep);

}  // namespace propunit
