#pragma once

#include "propunit/core.hpp"

#include <optional>
#include <utility>
#include <variant>
#include <vector>

namespace propunit {

// Strict partial order on 0..n-1 (irreflexive, transitive), dense matrix.
struct Poset {
  int n = 0;
  std::vector<char> lt;
  Poset() = default;
  explicit Poset(int n_) : n(n_), lt(static_cast<size_t>(n_) * static_cast<size_t>(n_), 0) {}
  bool less(int x, int y) const { return lt[static_cast<size_t>(x) * n + y] != 0; }
  void set_less(int x, int y) { lt[static_cast<size_t>(x) * n + y] = 1; }
  bool incomparable(int x, int y) const { return x != y && !less(x, y) && !less(y, x); }
  bool operator==(const Poset&) const = default;
};

// Transitive closure of the given pairs. If the relation has a cycle the
// cycle is returned instead, as a vertex sequence x0, x1, ..., x0.
std::variant<Poset, std::vector<int>> poset_from_relation(
    int n, const std::vector<std::pair<int, int>>& pairs);

// x < y iff x's interval lies entirely to the left: r_x < l_y.
Poset interval_order_of(const Representation& rep);

// Vertices adjacent iff incomparable in p.
Graph incomparability_graph(const Poset& p);

// Induced 2+2: a<b, c<d, all four cross pairs incomparable.
struct TwoPlusTwoWitness {
  int a = -1, b = -1, c = -1, d = -1;
  bool operator==(const TwoPlusTwoWitness&) const = default;
};

// Induced 1+3: chain[0] < chain[1] < chain[2], isolated incomparable to each.
struct OnePlusThreeWitness {
  int isolated = -1;
  std::array<int, 3> chain{};
  bool operator==(const OnePlusThreeWitness&) const = default;
};

bool verify_two_plus_two(const Poset& p, const TwoPlusTwoWitness& w);
bool verify_one_plus_three(const Poset& p, const OnePlusThreeWitness& w);

// Lexicographically least witnesses, if any.
std::optional<TwoPlusTwoWitness> find_two_plus_two(const Poset& p);
std::optional<OnePlusThreeWitness> find_one_plus_three(const Poset& p);

// No induced 2+2 and no induced 1+3.
bool check_semiorder_axioms(const Poset& p);

struct ValueFunction {
  std::vector<Rational> f;
  bool operator==(const ValueFunction&) const = default;
};

// x < y iff f(y) - f(x) > 1, over all ordered pairs.
bool verify_value_function(const Poset& p, const ValueFunction& vf);

struct NotIntervalOrder {
  TwoPlusTwoWitness witness;
};

using SemiorderValuesOutcome = std::variant<ValueFunction, OnePlusThreeWitness, NotIntervalOrder>;

// Builds a unit representation of p (brute interval representation, then
// to_unit on the incomparability graph) and returns f = left endpoints, so
// x < y iff f(y) > f(x) + 1. A claw in the incomparability graph maps back to
// an induced 1+3; a poset with no interval representation yields its 2+2.
SemiorderValuesOutcome semiorder_values(const Poset& p, int cap = 6);

enum class OrderClass { linear_order, semiorder, interval_order, poset };

struct Classification {
  OrderClass cls = OrderClass::poset;
  std::optional<ValueFunction> values;                // linear_order / semiorder
  std::optional<Representation> rep;                  // interval_order and finer
  std::optional<OnePlusThreeWitness> one_plus_three;  // why not a semiorder
  std::optional<TwoPlusTwoWitness> two_plus_two;      // why not an interval order
};

// Finest class among linear order, semiorder, interval order, poset,
// together with the certificate for the verdict.
Classification classify(const Poset& p, int cap = 6);

}  // namespace propunit
