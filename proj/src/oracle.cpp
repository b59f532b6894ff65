#include "propunit/oracle.hpp"

#include <functional>
#include <string>

namespace propunit {

int pair_count(int n) { return n * (n - 1) / 2; }

Graph graph_from_mask(int n, std::uint64_t mask) {
  Graph g(n);
  int k = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++k)
      if (mask >> k & 1) g.set_edge(i, j);
  return g;
}

GraphStream::GraphStream(int n_, int cap) : n(n_) {
  if (n < 0 || n > cap) throw CapExceeded("graph enumeration cap exceeded: n=" + std::to_string(n));
  total = std::uint64_t(1) << pair_count(n);
}

bool GraphStream::next(Graph& out) {
  if (next_mask >= total) return false;
  out = graph_from_mask(n, next_mask);
  ++next_mask;
  return true;
}

std::vector<Poset> enumerate_posets(int n, int cap) {
  if (n < 0 || n > cap) throw CapExceeded("poset enumeration cap exceeded: n=" + std::to_string(n));
  std::vector<std::pair<int, int>> ps;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) ps.emplace_back(i, j);
  std::vector<Poset> out;
  Poset cur(n);
  // Transitivity holds iff it holds on every triple; a triple can be checked as
  // soon as its lexicographically last pair gets assigned.
  auto triple_ok = [&](int x, int y, int z) {
    int v[3] = {x, y, z};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k) {
          if (i == j || j == k || i == k) continue;
          if (cur.less(v[i], v[j]) && cur.less(v[j], v[k]) && !cur.less(v[i], v[k])) return false;
        }
    return true;
  };
  std::function<void(size_t)> rec = [&](size_t k) {
    if (k == ps.size()) {
      out.push_back(cur);
      return;
    }
    auto [b, c] = ps[k];
    auto consistent = [&]() {
      for (int a = 0; a < b; ++a)
        if (!triple_ok(a, b, c)) return false;
      return true;
    };
    // incomparable first, then b<c, then c<b
    if (consistent()) rec(k + 1);
    cur.lt[static_cast<size_t>(b) * n + c] = 1;
    if (consistent()) rec(k + 1);
    cur.lt[static_cast<size_t>(b) * n + c] = 0;
    cur.lt[static_cast<size_t>(c) * n + b] = 1;
    if (consistent()) rec(k + 1);
    cur.lt[static_cast<size_t>(c) * n + b] = 0;
  };
  rec(0);
  return out;
}

std::optional<Representation> interval_rep_brute(const Graph& g, int cap) {
  const int n = g.n;
  if (n < 0 || n > cap || n > 25)
    throw CapExceeded("interval recognition cap exceeded: n=" + std::to_string(n));
  if (n == 0) return Representation{};
  std::vector<unsigned> nbr(static_cast<size_t>(n), 0);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v && g.adj(u, v)) nbr[u] |= 1u << v;
  std::vector<unsigned> cliques;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    bool clique = true;
    for (int v = 0; v < n && clique; ++v)
      if (mask >> v & 1)
        if ((mask & ~(1u << v) & ~nbr[v]) != 0) clique = false;
    if (!clique) continue;
    bool maximal = true;
    for (int v = 0; v < n && maximal; ++v)
      if (!(mask >> v & 1) && (mask & ~nbr[v]) == 0) maximal = false;
    if (maximal) cliques.push_back(mask);
  }
  // An interval graph has at most n maximal cliques (its clique tree is a path
  // over at most n nodes), so more than n of them already settles the answer.
  const int m = static_cast<int>(cliques.size());
  if (m > n) return std::nullopt;
  std::vector<int> order;
  std::vector<char> used(static_cast<size_t>(m), 0);
  std::function<bool(unsigned, unsigned)> dfs = [&](unsigned open, unsigned closed) {
    if (static_cast<int>(order.size()) == m) return true;
    for (int c = 0; c < m; ++c) {
      if (used[c] || (cliques[c] & closed)) continue;
      unsigned q = cliques[c];
      unsigned seen = open | closed;
      used[c] = 1;
      order.push_back(c);
      if (dfs((open & q) | (q & ~seen), closed | (open & ~q))) return true;
      order.pop_back();
      used[c] = 0;
    }
    return false;
  };
  if (!dfs(0, 0)) return std::nullopt;
  std::vector<int> first(static_cast<size_t>(n), -1), last(static_cast<size_t>(n), -1);
  for (int pos = 0; pos < m; ++pos)
    for (int v = 0; v < n; ++v)
      if (cliques[order[pos]] >> v & 1) {
        if (first[v] < 0) first[v] = pos;
        last[v] = pos;
      }
  Representation rep;
  rep.intervals.reserve(static_cast<size_t>(n));
  for (int v = 0; v < n; ++v) rep.intervals.emplace_back(Rational(first[v]), Rational(last[v]));
  return rep;
}

std::optional<Representation> interval_rep_of_poset(const Poset& p, int cap) {
  const int n = p.n;
  if (n < 0 || n > cap) throw CapExceeded("poset representation cap exceeded: n=" + std::to_string(n));
  if (n == 0) return Representation{};
  const int grid = 2 * n;
  std::vector<int> lo(static_cast<size_t>(n), 0), hi(static_cast<size_t>(n), 0);
  std::function<bool(int)> dfs = [&](int v) {
    if (v == n) return true;
    for (int l = 0; l < grid; ++l)
      for (int r = l; r < grid; ++r) {
        bool ok = true;
        for (int u = 0; u < v && ok; ++u)
          ok = (p.less(u, v) == (hi[u] < l)) && (p.less(v, u) == (r < lo[u]));
        if (!ok) continue;
        lo[v] = l;
        hi[v] = r;
        if (dfs(v + 1)) return true;
      }
    return false;
  };
  if (!dfs(0)) return std::nullopt;
  Representation rep;
  rep.intervals.reserve(static_cast<size_t>(n));
  for (int v = 0; v < n; ++v) rep.intervals.emplace_back(Rational(lo[v]), Rational(hi[v]));
  return rep;
}

bool verify_unit_rep(const Graph& g, const Representation& rep) {
  return rep.size() == g.n && is_unit(rep) && intersection_graph(rep) == g;
}

std::optional<Representation> unit_rep_feasible(const Graph& g, int cap) {
  const int n = g.n;
  if (n < 0 || n > cap) throw CapExceeded("unit feasibility cap exceeded: n=" + std::to_string(n));
  if (n == 0) return Representation{};
  std::vector<int> sigma;
  sigma.reserve(static_cast<size_t>(n));
  std::vector<char> used(static_cast<size_t>(n), 0);

  // In any feasible left-endpoint order, the earlier neighbors of the next
  // vertex form a clique occupying a suffix of the prefix; anything else
  // cannot satisfy the constraint system, so such prefixes are skipped.
  auto can_append = [&](int w) {
    const int k = static_cast<int>(sigma.size());
    int first_nbr = k;
    for (int i = 0; i < k; ++i)
      if (g.adj(sigma[i], w)) {
        first_nbr = i;
        break;
      }
    for (int i = first_nbr; i < k; ++i)
      if (!g.adj(sigma[i], w)) return false;
    for (int i = first_nbr; i < k; ++i)
      for (int j = i + 1; j < k; ++j)
        if (!g.adj(sigma[i], sigma[j])) return false;
    return true;
  };

  // Difference constraints over x_v (interval = [x_v, x_v+1]) for the current
  // order: adjacent u-before-v gives x_v <= x_u + 1 and x_u <= x_v; a
  // non-adjacent pair gives x_u <= x_v - 1 - delta with delta symbolic. Weights
  // are (value, strict-count) pairs compared lexicographically; Bellman-Ford
  // from an implicit all-zero source either converges or exposes a negative
  // cycle, which is exactly infeasibility.
  auto solve = [&]() -> std::optional<Representation> {
    struct E {
      int from, to;
      long long p, q;
    };
    std::vector<E> edges;
    long long strict = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        int u = sigma[i], v = sigma[j];
        if (g.adj(u, v)) {
          edges.push_back({u, v, 1, 0});
          edges.push_back({v, u, 0, 0});
        } else {
          edges.push_back({v, u, -1, -1});
          ++strict;
        }
      }
    std::vector<long long> dp(static_cast<size_t>(n), 0), dq(static_cast<size_t>(n), 0);
    for (int round = 0;; ++round) {
      bool changed = false;
      for (const auto& e : edges) {
        long long np = dp[e.from] + e.p;
        long long nq = dq[e.from] + e.q;
        if (np < dp[e.to] || (np == dp[e.to] && nq < dq[e.to])) {
          dp[e.to] = np;
          dq[e.to] = nq;
          changed = true;
        }
      }
      if (!changed) break;
      if (round >= n) return std::nullopt;
    }
    // Any delta in (0, 1/(S+1)) realizes the strict inequalities; stay well inside.
    Rational delta(1, 2 * strict + 2);
    Representation rep;
    rep.intervals.reserve(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) {
      Rational x = Rational(dp[v]) + Rational(dq[v]) * delta;
      rep.intervals.emplace_back(x, x + 1);
    }
    if (!verify_unit_rep(g, rep))
      throw std::logic_error("feasible constraint system yielded a bad unit representation");
    return rep;
  };

  std::optional<Representation> result;
  std::function<bool()> dfs = [&]() {
    if (static_cast<int>(sigma.size()) == n) {
      result = solve();
      return result.has_value();
    }
    for (int v = 0; v < n; ++v) {
      if (used[v] || !can_append(v)) continue;
      used[v] = 1;
      sigma.push_back(v);
      if (dfs()) return true;
      sigma.pop_back();
      used[v] = 0;
    }
    return false;
  };
  dfs();
  return result;
}

}  // namespace propunit
