#include "propunit/core.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace propunit {

Interval::Interval(Rational l, Rational r) : left(std::move(l)), right(std::move(r)) {
  if (left > right) throw std::invalid_argument("interval left endpoint exceeds right endpoint");
}

bool touches(const Interval& a, const Interval& b) {
  return a.left <= b.right && b.left <= a.right;
}

bool properly_contains(const Interval& outer, const Interval& inner) {
  return outer.left <= inner.left && inner.right <= outer.right && outer != inner;
}

void Graph::set_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= n || v >= n || u == v)
    throw std::invalid_argument("bad edge endpoints");
  a[static_cast<size_t>(u) * n + v] = 1;
  a[static_cast<size_t>(v) * n + u] = 1;
}

int Graph::edge_count() const {
  int m = 0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (adj(u, v)) ++m;
  return m;
}

Graph intersection_graph(const Representation& rep) {
  int n = rep.size();
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (touches(rep.intervals[u], rep.intervals[v])) g.set_edge(u, v);
  return g;
}

bool is_proper(const Representation& rep) {
  int n = rep.size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (x != y && properly_contains(rep.intervals[x], rep.intervals[y])) return false;
  return true;
}

bool is_unit(const Representation& rep) {
  for (const auto& iv : rep.intervals)
    if (iv.length() != 1) return false;
  return true;
}

long long count_containment_pairs(const Representation& rep) {
  int n = rep.size();
  long long c = 0;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (x != y && properly_contains(rep.intervals[x], rep.intervals[y])) ++c;
  return c;
}

Representation canonicalize(const Representation& rep) {
  int n = rep.size();
  struct Event {
    const Rational* value;
    bool is_left;
    int vertex;
  };
  std::vector<Event> events;
  events.reserve(2 * static_cast<size_t>(n));
  for (int v = 0; v < n; ++v) {
    events.push_back({&rep.intervals[v].left, true, v});
    events.push_back({&rep.intervals[v].right, false, v});
  }
  std::stable_sort(events.begin(), events.end(), [](const Event& a, const Event& b) {
    if (*a.value != *b.value) return *a.value < *b.value;
    if (a.is_left != b.is_left) return a.is_left;  // left endpoints first
    return a.vertex < b.vertex;
  });
  std::vector<Rational> lo(n), hi(n);
  for (size_t k = 0; k < events.size(); ++k) {
    const Event& e = events[k];
    (e.is_left ? lo[e.vertex] : hi[e.vertex]) = Rational(static_cast<long>(k));
  }
  Representation out;
  out.intervals.reserve(n);
  for (int v = 0; v < n; ++v) out.intervals.emplace_back(lo[v], hi[v]);
  return out;
}

bool verify_claw(const Graph& g, const ClawWitness& w) {
  int ids[4] = {w.center, w.leaves[0], w.leaves[1], w.leaves[2]};
  for (int id : ids)
    if (id < 0 || id >= g.n) return false;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (ids[i] == ids[j]) return false;
  for (int k = 0; k < 3; ++k)
    if (!g.adj(w.center, w.leaves[k])) return false;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (g.adj(w.leaves[i], w.leaves[j])) return false;
  return true;
}

std::optional<ClawWitness> find_claw(const Graph& g) {
  for (int c = 0; c < g.n; ++c) {
    std::vector<int> nbr;
    for (int v = 0; v < g.n; ++v)
      if (v != c && g.adj(c, v)) nbr.push_back(v);
    int d = static_cast<int>(nbr.size());
    for (int i = 0; i < d; ++i)
      for (int j = i + 1; j < d; ++j) {
        if (g.adj(nbr[i], nbr[j])) continue;
        for (int k = j + 1; k < d; ++k) {
          if (g.adj(nbr[i], nbr[k]) || g.adj(nbr[j], nbr[k])) continue;
          return ClawWitness{c, {nbr[i], nbr[j], nbr[k]}};
        }
      }
  }
  return std::nullopt;
}

}  // namespace propunit
