#include "propunit/transform.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace propunit {

namespace {

// Largest endpoint value strictly below bound, if any.
std::optional<Rational> prev_endpoint(const Representation& rep, const Rational& bound) {
  std::optional<Rational> best;
  for (const auto& iv : rep.intervals)
    for (const Rational* e : {&iv.left, &iv.right})
      if (*e < bound && (!best || *e > *best)) best = *e;
  return best;
}

// Smallest endpoint value strictly above bound, if any.
std::optional<Rational> next_endpoint(const Representation& rep, const Rational& bound) {
  std::optional<Rational> best;
  for (const auto& iv : rep.intervals)
    for (const Rational* e : {&iv.left, &iv.right})
      if (*e > bound && (!best || *e < *best)) best = *e;
  return best;
}

// Extension target strictly past bound: midpoint to the adjacent endpoint, or 1 beyond.
Rational target_below(const Representation& rep, const Rational& bound) {
  auto prev = prev_endpoint(rep, bound);
  if (prev) return Rational((bound + *prev) / 2);
  return Rational(bound - 1);
}

Rational target_above(const Representation& rep, const Rational& bound) {
  auto next = next_endpoint(rep, bound);
  if (next) return Rational((bound + *next) / 2);
  return Rational(bound + 1);
}

// Any endpoint of any interval strictly inside (lo, hi)?
bool endpoint_in_window(const Representation& rep, const Rational& lo, const Rational& hi) {
  for (const auto& iv : rep.intervals)
    for (const Rational* e : {&iv.left, &iv.right})
      if (*e > lo && *e < hi) return true;
  return false;
}

// Owner of the least endpoint in (lo, hi) among intervals disjoint from y; -1 if none.
int disjoint_blocker(const Representation& rep, int y, const Rational& lo, const Rational& hi) {
  int best = -1;
  Rational best_val;
  for (int z = 0; z < rep.size(); ++z) {
    if (z == y || touches(rep.intervals[z], rep.intervals[y])) continue;
    const auto& zi = rep.intervals[z];
    for (const Rational* e : {&zi.left, &zi.right})
      if (*e > lo && *e < hi && (best < 0 || *e < best_val)) {
        best = z;
        best_val = *e;
      }
  }
  return best;
}

}  // namespace

Representation apply_properize_step(const Representation& rep, const ProperizeStep& s) {
  Representation out = rep;
  out.intervals.at(static_cast<size_t>(s.vertex)) = s.to;
  return out;
}

ProperizeOutcome properize(const Representation& rep) {
  if (is_proper(rep)) return ProperizeResult{rep, ProperizeTrace{rep, {}}};
  Representation cur = canonicalize(rep);  // distinct endpoints from here on
  ProperizeTrace trace{cur, {}};
  const int n = cur.size();
  // Safe moves strictly decrease the containment-pair count, so they alone fit
  // in the first summand; the rest insures the fallback path terminates.
  long long budget = count_containment_pairs(cur) + 1LL * n * n + 64;

  auto extend = [&](int y, ExtendDir dir, const Rational& bound) {
    ProperizeStep st;
    st.vertex = y;
    st.dir = dir;
    st.from = cur.intervals[y];
    if (dir == ExtendDir::left)
      st.to = Interval(target_below(cur, bound), st.from.right);
    else
      st.to = Interval(st.from.left, target_above(cur, bound));
    cur.intervals[y] = st.to;
    trace.steps.push_back(std::move(st));
  };

  while (true) {
    // Contained intervals with their innermost container bounds.
    struct Item {
      int y;
      int xhat;       // container attaining lmax
      Rational lmax;  // max container left
      Rational rmin;  // min container right
    };
    std::vector<Item> items;
    for (int y = 0; y < n; ++y) {
      Item it{y, -1, 0, 0};
      bool first = true;
      for (int x = 0; x < n; ++x) {
        if (x == y || !properly_contains(cur.intervals[x], cur.intervals[y])) continue;
        if (first || cur.intervals[x].left > it.lmax) {
          it.lmax = cur.intervals[x].left;
          it.xhat = x;
        }
        if (first || cur.intervals[x].right < it.rmin) it.rmin = cur.intervals[x].right;
        first = false;
      }
      if (it.xhat >= 0) items.push_back(std::move(it));
    }
    if (items.empty()) break;
    if (--budget < 0) throw std::logic_error("properize exceeded its move budget");

    std::sort(items.begin(), items.end(), [&](const Item& p, const Item& q) {
      return cur.intervals[p.y].left < cur.intervals[q.y].left;
    });

    bool moved = false;
    for (const Item& it : items) {
      const Rational& ly = cur.intervals[it.y].left;
      const Rational& ry = cur.intervals[it.y].right;
      if (!endpoint_in_window(cur, it.lmax, ly)) {
        extend(it.y, ExtendDir::left, it.lmax);
        moved = true;
        break;
      }
      if (!endpoint_in_window(cur, ry, it.rmin)) {
        extend(it.y, ExtendDir::right, it.rmin);
        moved = true;
        break;
      }
      int bl = disjoint_blocker(cur, it.y, it.lmax, ly);
      int br = disjoint_blocker(cur, it.y, ry, it.rmin);
      if (bl >= 0 && br >= 0) {
        std::array<int, 3> leaves{bl, it.y, br};
        std::sort(leaves.begin(), leaves.end());
        return ClawWitness{it.xhat, leaves};
      }
    }
    if (moved) continue;

    // No single-side-free contained interval and no two-sided disjoint blockade:
    // fall back to an exhaustive claw search on the current graph.
    if (auto w = find_claw(intersection_graph(cur))) return *w;

    // Claw-free yet no safe move: extend the lexicographically least containment
    // pair on a graph-safe side. This preserves graph and order but may stall the
    // pair count, hence the budget guard.
    int fx = -1, fy = -1;
    for (int x = 0; x < n && fx < 0; ++x)
      for (int y = 0; y < n; ++y)
        if (x != y && properly_contains(cur.intervals[x], cur.intervals[y])) {
          fx = x;
          fy = y;
          break;
        }
    if (fx < 0) throw std::logic_error("properize lost its containment pair");
    const Interval& xi = cur.intervals[fx];
    const Interval& yi = cur.intervals[fy];
    if (disjoint_blocker(cur, fy, xi.left, yi.left) < 0)
      extend(fy, ExtendDir::left, xi.left);
    else if (disjoint_blocker(cur, fy, yi.right, xi.right) < 0)
      extend(fy, ExtendDir::right, xi.right);
    else
      throw std::logic_error("claw-free representation with both spans blocked");
  }
  return ProperizeResult{std::move(cur), std::move(trace)};
}

Representation apply_sweep_step(const Representation& rep, const SweepStep& s) {
  const Rational& a = s.pivot_before.left;
  const Rational& b = s.pivot_before.right;
  Representation out;
  out.intervals.reserve(rep.intervals.size());
  if (s.expanded) {
    for (const auto& iv : rep.intervals) {
      Rational nl = iv.left > a ? iv.left + 1 : iv.left;
      Rational nr = iv.right > a ? iv.right + 1 : iv.right;
      if (iv.left == a && iv.right == a) nr = a + 1;
      out.intervals.emplace_back(std::move(nl), std::move(nr));
    }
  } else {
    const Rational& al = s.alpha;
    Rational slope = (a + 1 - al) / (b - al);
    Rational shift = (a + 1) - b;
    auto map = [&](const Rational& t) -> Rational {
      if (t <= al) return t;
      if (t <= b) return al + (t - al) * slope;
      return t + shift;
    };
    for (const auto& iv : rep.intervals)
      out.intervals.emplace_back(map(iv.left), map(iv.right));
  }
  return out;
}

UnitizeResult unitize(const Representation& rep) {
  if (!is_proper(rep)) throw std::invalid_argument("unitize requires a proper representation");
  Representation cur = rep;
  const int n = cur.size();
  std::vector<char> adjusted(static_cast<size_t>(n), 0);
  UnitizeResult out;
  int done = 0;
  while (done < n) {
    int pivot = -1;
    for (int v = 0; v < n; ++v) {
      if (adjusted[v]) continue;
      if (pivot < 0 || cur.intervals[v].left < cur.intervals[pivot].left) pivot = v;
    }
    const Rational a = cur.intervals[pivot].left;
    const Rational b = cur.intervals[pivot].right;
    SweepStep st;
    st.pivot = pivot;
    st.pivot_before = cur.intervals[pivot];
    std::vector<int> newly;
    if (b == a) {
      // Zero-length pivot: shift endpoints above a up by 1 and rescale the
      // whole class of intervals equal to [a, a] at once.
      st.expanded = true;
      st.alpha = a;
      for (int v = 0; v < n; ++v)
        if (!adjusted[v] && cur.intervals[v] == st.pivot_before) newly.push_back(v);
    } else if (b - a == 1) {
      st.alpha = a;  // the piecewise map degenerates to the identity
      newly.push_back(pivot);
    } else {
      // Only right endpoints of already-adjusted intervals may cap the fixed
      // region: properness bounds them strictly below min(a+1, b).
      Rational alpha = a;
      for (int w = 0; w < n; ++w) {
        if (!adjusted[w]) continue;
        const Rational& rw = cur.intervals[w].right;
        if (rw >= a && rw <= b && rw > alpha) alpha = rw;
      }
      if (!(alpha < b && alpha < a + 1)) throw std::logic_error("unitize pivot bound violated");
      st.alpha = alpha;
      newly.push_back(pivot);
    }
    cur = apply_sweep_step(cur, st);
    for (int v : newly) adjusted[v] = 1;
    done += static_cast<int>(newly.size());
    for (int v = 0; v < n; ++v)
      if (adjusted[v]) st.adjusted_after.push_back(v);
    out.steps.push_back(std::move(st));
  }
  out.rep = std::move(cur);
  return out;
}

ToUnitOutcome to_unit(const Graph& g, const Representation& rep) {
  if (intersection_graph(rep) != g)
    throw std::invalid_argument("representation does not realize the given graph");
  auto po = properize(rep);
  if (std::holds_alternative<ClawWitness>(po)) return std::get<ClawWitness>(po);
  auto& pr = std::get<ProperizeResult>(po);
  auto ur = unitize(pr.rep);
  return ToUnitResult{std::move(ur.rep), std::move(pr.trace), std::move(ur.steps)};
}

}  // namespace propunit
