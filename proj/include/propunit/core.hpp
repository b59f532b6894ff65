#pragma once

#include "propunit/rational.hpp"

#include <array>
#include <optional>
#include <vector>

namespace propunit {

// Closed interval with rational endpoints, left <= right.
struct Interval {
  Rational left;
  Rational right;
  Interval() = default;
  Interval(Rational l, Rational r);
  Rational length() const { return right - left; }
  bool operator==(const Interval&) const = default;
};

// Closed intervals share at least one point.
bool touches(const Interval& a, const Interval& b);
// inner is a subset of outer and the two differ as point sets.
bool properly_contains(const Interval& outer, const Interval& inner);

// Intervals indexed by vertex id 0..n-1.
struct Representation {
  std::vector<Interval> intervals;
  int size() const { return static_cast<int>(intervals.size()); }
  bool operator==(const Representation&) const = default;
};

// Simple undirected graph over 0..n-1, flat adjacency matrix.
struct Graph {
  int n = 0;
  std::vector<char> a;
  Graph() = default;
  explicit Graph(int n_) : n(n_), a(static_cast<size_t>(n_) * static_cast<size_t>(n_), 0) {}
  bool adj(int u, int v) const { return a[static_cast<size_t>(u) * n + v] != 0; }
  void set_edge(int u, int v);
  int edge_count() const;
  bool operator==(const Graph&) const = default;
};

// Vertices adjacent iff their intervals share a point.
Graph intersection_graph(const Representation& rep);

// No interval properly contains another (equal intervals are allowed).
bool is_proper(const Representation& rep);

// Every interval has length exactly 1.
bool is_unit(const Representation& rep);

// Ordered pairs (x, y) with interval x properly containing interval y.
long long count_containment_pairs(const Representation& rep);

// Relabels endpoints with their ranks 0..2n-1 after sorting by
// (value, left endpoints before right, vertex id). All endpoints become
// distinct integers; the intersection graph and the interval order are
// preserved exactly, and the map is idempotent.
Representation canonicalize(const Representation& rep);

// Induced K_{1,3}: center adjacent to three pairwise non-adjacent leaves.
struct ClawWitness {
  int center = -1;
  std::array<int, 3> leaves{};  // ascending vertex ids
  bool operator==(const ClawWitness&) const = default;
};

bool verify_claw(const Graph& g, const ClawWitness& w);

// Lexicographically least (center, leaves) claw, if any.
std::optional<ClawWitness> find_claw(const Graph& g);

}  // namespace propunit
