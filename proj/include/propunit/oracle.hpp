#pragma once

#include "propunit/core.hpp"
#include "propunit/orders.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace propunit {

struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int pair_count(int n);

// Graph on n vertices from an edge bitmask; bit k covers pair (i, j), i < j,
// pairs ordered lexicographically by (i, j).
Graph graph_from_mask(int n, std::uint64_t mask);

// All 2^C(n,2) labeled simple graphs, edge-bitmask ascending.
struct GraphStream {
  int n = 0;
  std::uint64_t next_mask = 0;
  std::uint64_t total = 0;
  explicit GraphStream(int n_, int cap = 8);
  bool next(Graph& out);
};

// All labeled strict partial orders on n elements, deterministic order
// (pairwise relation trits ascending with transitivity pruning).
std::vector<Poset> enumerate_posets(int n, int cap = 6);

// Interval-graph recognition by consecutive arrangement of maximal cliques;
// emits intervals [first clique position, last clique position]. Independent
// of the transform pipeline.
std::optional<Representation> interval_rep_brute(const Graph& g, int cap = 8);

// Exhaustive endpoint assignment over the 0..2n-1 grid; the result's
// interval_order_of equals p exactly, or none if p is not an interval order.
std::optional<Representation> interval_rep_of_poset(const Poset& p, int cap = 6);

// Unit representability by difference-constraint feasibility over all
// left-endpoint orders; strict inequalities carried symbolically as
// (value, strict-edge count) pairs. Never calls properize/unitize/find_claw.
std::optional<Representation> unit_rep_feasible(const Graph& g, int cap = 7);

// is_unit and intersection graph equality.
bool verify_unit_rep(const Graph& g, const Representation& rep);

}  // namespace propunit
