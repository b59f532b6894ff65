#include "propunit/orders.hpp"

#include "propunit/oracle.hpp"
#include "propunit/transform.hpp"

#include <algorithm>
#include <stdexcept>

namespace propunit {

std::variant<Poset, std::vector<int>> poset_from_relation(
    int n, const std::vector<std::pair<int, int>>& pairs) {
  if (n < 0) throw std::invalid_argument("negative poset size");
  Poset p(n);
  for (auto [x, y] : pairs) {
    if (x < 0 || y < 0 || x >= n || y >= n) throw std::invalid_argument("relation id out of range");
    p.set_less(x, y);
  }
  // Warshall closure.
  for (int k = 0; k < n; ++k)
    for (int x = 0; x < n; ++x)
      if (p.less(x, k))
        for (int y = 0; y < n; ++y)
          if (p.less(k, y)) p.set_less(x, y);
  for (int x = 0; x < n; ++x) {
    if (!p.less(x, x)) continue;
    // Recover an explicit cycle x -> ... -> x over the input pairs.
    std::vector<int> parent(static_cast<size_t>(n), -1);
    std::vector<int> queue{x};
    std::vector<char> seen(static_cast<size_t>(n), 0);
    for (size_t head = 0; head < queue.size(); ++head) {
      int u = queue[head];
      for (auto [s, t] : pairs) {
        if (s != u || seen[t]) continue;
        seen[t] = 1;
        parent[t] = u;
        if (t == x) {
          head = queue.size();
          break;
        }
        queue.push_back(t);
      }
    }
    std::vector<int> cycle{x};
    for (int v = parent[x]; v != x && v >= 0; v = parent[v]) cycle.push_back(v);
    cycle.push_back(x);
    std::reverse(cycle.begin(), cycle.end());
    return cycle;
  }
  return p;
}

Poset interval_order_of(const Representation& rep) {
  int n = rep.size();
  Poset p(n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (x != y && rep.intervals[x].right < rep.intervals[y].left) p.set_less(x, y);
  return p;
}

Graph incomparability_graph(const Poset& p) {
  Graph g(p.n);
  for (int u = 0; u < p.n; ++u)
    for (int v = u + 1; v < p.n; ++v)
      if (p.incomparable(u, v)) g.set_edge(u, v);
  return g;
}

bool verify_two_plus_two(const Poset& p, const TwoPlusTwoWitness& w) {
  int ids[4] = {w.a, w.b, w.c, w.d};
  for (int id : ids)
    if (id < 0 || id >= p.n) return false;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (ids[i] == ids[j]) return false;
  return p.less(w.a, w.b) && p.less(w.c, w.d) && p.incomparable(w.a, w.c) &&
         p.incomparable(w.a, w.d) && p.incomparable(w.b, w.c) && p.incomparable(w.b, w.d);
}

bool verify_one_plus_three(const Poset& p, const OnePlusThreeWitness& w) {
  int ids[4] = {w.isolated, w.chain[0], w.chain[1], w.chain[2]};
  for (int id : ids)
    if (id < 0 || id >= p.n) return false;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (ids[i] == ids[j]) return false;
  return p.less(w.chain[0], w.chain[1]) && p.less(w.chain[1], w.chain[2]) &&
         p.incomparable(w.isolated, w.chain[0]) && p.incomparable(w.isolated, w.chain[1]) &&
         p.incomparable(w.isolated, w.chain[2]);
}

std::optional<TwoPlusTwoWitness> find_two_plus_two(const Poset& p) {
  for (int a = 0; a < p.n; ++a)
    for (int b = 0; b < p.n; ++b)
      for (int c = 0; c < p.n; ++c)
        for (int d = 0; d < p.n; ++d) {
          TwoPlusTwoWitness w{a, b, c, d};
          if (verify_two_plus_two(p, w)) return w;
        }
  return std::nullopt;
}

std::optional<OnePlusThreeWitness> find_one_plus_three(const Poset& p) {
  for (int x = 0; x < p.n; ++x)
    for (int a = 0; a < p.n; ++a)
      for (int b = 0; b < p.n; ++b)
        for (int c = 0; c < p.n; ++c) {
          OnePlusThreeWitness w{x, {a, b, c}};
          if (verify_one_plus_three(p, w)) return w;
        }
  return std::nullopt;
}

bool check_semiorder_axioms(const Poset& p) {
  return !find_two_plus_two(p) && !find_one_plus_three(p);
}

bool verify_value_function(const Poset& p, const ValueFunction& vf) {
  if (static_cast<int>(vf.f.size()) != p.n) return false;
  for (int x = 0; x < p.n; ++x)
    for (int y = 0; y < p.n; ++y) {
      if (x == y) continue;
      if (p.less(x, y) != (vf.f[y] - vf.f[x] > 1)) return false;
    }
  return true;
}

SemiorderValuesOutcome semiorder_values(const Poset& p, int cap) {
  auto rep = interval_rep_of_poset(p, cap);
  if (!rep) {
    auto tt = find_two_plus_two(p);
    if (!tt) throw std::logic_error("poset lacks an interval representation but has no 2+2");
    return NotIntervalOrder{*tt};
  }
  Graph g = incomparability_graph(p);
  auto outcome = to_unit(g, *rep);
  if (std::holds_alternative<ClawWitness>(outcome)) {
    // A claw in the incomparability graph is exactly an induced 1+3: the three
    // pairwise-comparable leaves form the chain, the center is incomparable to all.
    const auto& cw = std::get<ClawWitness>(outcome);
    std::array<int, 3> chain = cw.leaves;
    std::sort(chain.begin(), chain.end(), [&](int u, int v) { return p.less(u, v); });
    OnePlusThreeWitness w{cw.center, chain};
    if (!verify_one_plus_three(p, w)) throw std::logic_error("claw did not map to a 1+3");
    return w;
  }
  const auto& unit = std::get<ToUnitResult>(outcome).rep;
  if (interval_order_of(unit) != p)
    throw std::logic_error("unit representation changed the interval order");
  ValueFunction vf;
  vf.f.reserve(unit.intervals.size());
  for (const auto& iv : unit.intervals) vf.f.push_back(iv.left);
  if (!verify_value_function(p, vf)) throw std::logic_error("value function failed verification");
  return vf;
}

Classification classify(const Poset& p, int cap) {
  Classification out;
  if (auto tt = find_two_plus_two(p)) {
    out.cls = OrderClass::poset;
    out.two_plus_two = tt;
    return out;
  }
  auto rep = interval_rep_of_poset(p, cap);
  if (!rep) throw std::logic_error("2+2-free poset without an interval representation");
  out.rep = std::move(rep);
  if (auto ot = find_one_plus_three(p)) {
    out.cls = OrderClass::interval_order;
    out.one_plus_three = ot;
    return out;
  }
  auto sv = semiorder_values(p, cap);
  if (!std::holds_alternative<ValueFunction>(sv))
    throw std::logic_error("semiorder without a value function");
  out.values = std::get<ValueFunction>(sv);
  bool linear = true;
  for (int u = 0; u < p.n && linear; ++u)
    for (int v = u + 1; v < p.n && linear; ++v)
      if (p.incomparable(u, v)) linear = false;
  out.cls = linear ? OrderClass::linear_order : OrderClass::semiorder;
  return out;
}

}  // namespace propunit
