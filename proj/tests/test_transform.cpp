#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "propunit/transform.hpp"

#include <random>

using namespace propunit;

namespace {

Representation rep(std::initializer_list<std::pair<int, int>> ivs) {
  Representation r;
  for (const auto& [l, rr] : ivs) r.intervals.emplace_back(Rational(l), Rational(rr));
  return r;
}

Representation k13_rep() { return rep({{0, 7}, {0, 1}, {3, 4}, {6, 7}}); }

// precedence matrix r_x < l_y, the order the transforms must preserve
std::vector<char> precedence(const Representation& r) {
  std::vector<char> out;
  for (const auto& x : r.intervals)
    for (const auto& y : r.intervals) out.push_back(x.right < y.left ? 1 : 0);
  return out;
}

Representation random_rep(std::mt19937& rng, int max_n) {
  std::uniform_int_distribution<int> nd(1, max_n);
  const int n = nd(rng);
  std::uniform_int_distribution<int> coord(0, 2 * n);
  std::uniform_int_distribution<int> den(1, 4);
  Representation r;
  for (int v = 0; v < n; ++v) {
    Rational a(coord(rng), den(rng));
    Rational b(coord(rng), den(rng));
    if (b < a) std::swap(a, b);
    r.intervals.emplace_back(a, b);
  }
  return r;
}

}  // namespace

TEST_CASE("properize leaves proper input untouched") {
  const Representation r = rep({{0, 1}, {1, 2}});
  auto out = properize(r);
  REQUIRE(std::holds_alternative<ProperizeResult>(out));
  const auto& res = std::get<ProperizeResult>(out);
  CHECK(res.rep == r);
  CHECK(res.trace.steps.empty());
  CHECK(res.trace.start == r);
}

TEST_CASE("properize removes a container by extension") {
  const Representation r = rep({{0, 10}, {4, 6}, {9, 12}});
  auto out = properize(r);
  REQUIRE(std::holds_alternative<ProperizeResult>(out));
  const auto& res = std::get<ProperizeResult>(out);
  CHECK(is_proper(res.rep));
  CHECK(intersection_graph(res.rep) == intersection_graph(r));
  CHECK(count_containment_pairs(res.rep) == 0);
}

TEST_CASE("properize handles duplicated intervals under a container") {
  const Representation r = rep({{0, 5}, {1, 2}, {1, 2}});
  auto out = properize(r);
  REQUIRE(std::holds_alternative<ProperizeResult>(out));
  const auto& res = std::get<ProperizeResult>(out);
  CHECK(is_proper(res.rep));
  CHECK(intersection_graph(res.rep) == intersection_graph(r));
}

TEST_CASE("properize certifies the 4-star") {
  auto out = properize(k13_rep());
  REQUIRE(std::holds_alternative<ClawWitness>(out));
  const auto& cw = std::get<ClawWitness>(out);
  CHECK(cw.center == 0);
  CHECK(cw.leaves == std::array<int, 3>{1, 2, 3});
  CHECK(verify_claw(intersection_graph(k13_rep()), cw));
}

TEST_CASE("properize trace replays exactly and drops one pair per step") {
  const Representation r = rep({{0, 10}, {1, 3}, {5, 7}, {2, 8}});
  auto out = properize(r);
  REQUIRE(std::holds_alternative<ProperizeResult>(out));
  const auto& res = std::get<ProperizeResult>(out);
  const Graph g = intersection_graph(r);
  CHECK(intersection_graph(res.trace.start) == g);
  Representation cur = res.trace.start;
  int pairs = count_containment_pairs(cur);
  for (const auto& st : res.trace.steps) {
    cur = apply_properize_step(cur, st);
    const int now = count_containment_pairs(cur);
    CHECK(now == pairs - 1);
    CHECK(intersection_graph(cur) == g);
    pairs = now;
  }
  CHECK(cur == res.rep);
}

TEST_CASE("unitize golden sweep") {
  const Representation r = rep({{0, 3}, {2, 5}});
  UnitizeResult res = unitize(r);
  Representation want;
  want.intervals.emplace_back(Rational(0), Rational(1));
  want.intervals.emplace_back(Rational(2, 3), Rational(5, 3));
  CHECK(res.rep == want);
  REQUIRE(res.steps.size() == 2);
  CHECK(res.steps[0].pivot == 0);
  CHECK(res.steps[0].pivot_before == Interval(Rational(0), Rational(3)));
  CHECK(res.steps[0].alpha == Rational(0));
  CHECK(!res.steps[0].expanded);
  CHECK(res.steps[1].pivot == 1);
  CHECK(res.steps[1].pivot_before == Interval(Rational(2, 3), Rational(3)));
  CHECK(res.steps[1].alpha == Rational(1));
  CHECK(!res.steps[1].expanded);
}

TEST_CASE("unitize expands point intervals") {
  UnitizeResult res = unitize(rep({{0, 0}, {1, 1}, {2, 2}}));
  CHECK(res.rep == rep({{0, 1}, {2, 3}, {4, 5}}));
  for (const auto& st : res.steps) CHECK(st.expanded);
}

TEST_CASE("unitize maps duplicates together") {
  UnitizeResult res = unitize(rep({{0, 2}, {0, 2}}));
  CHECK(res.rep == rep({{0, 1}, {0, 1}}));
}

TEST_CASE("unitize rejects improper input and fixes unit input") {
  CHECK_THROWS_AS(unitize(rep({{0, 5}, {1, 2}})), std::invalid_argument);
  const Representation u = rep({{0, 1}, {1, 2}});
  CHECK(unitize(u).rep == u);
}

TEST_CASE("unitize steps replay to the result") {
  const Representation r = rep({{0, 3}, {2, 5}, {6, 6}, {7, 9}});
  REQUIRE(is_proper(r));
  UnitizeResult res = unitize(r);
  Representation cur = r;
  const Graph g = intersection_graph(r);
  for (const auto& st : res.steps) {
    cur = apply_sweep_step(cur, st);
    CHECK(intersection_graph(cur) == g);
  }
  CHECK(cur == res.rep);
  CHECK(is_unit(res.rep));
}

TEST_CASE("to_unit validates the graph argument") {
  const Representation r = rep({{0, 3}, {2, 5}});
  Graph wrong(2);
  CHECK_THROWS_AS(to_unit(wrong, r), std::invalid_argument);
}

TEST_CASE("to_unit golden run keeps the proper input unchanged before sweeping") {
  const Representation r = rep({{0, 3}, {2, 5}});
  auto out = to_unit(intersection_graph(r), r);
  REQUIRE(std::holds_alternative<ToUnitResult>(out));
  const auto& res = std::get<ToUnitResult>(out);
  CHECK(res.properize_trace.steps.empty());
  CHECK(res.sweep_steps.size() == 2);
  Representation want;
  want.intervals.emplace_back(Rational(0), Rational(1));
  want.intervals.emplace_back(Rational(2, 3), Rational(5, 3));
  CHECK(res.rep == want);
}

TEST_CASE("to_unit certifies the 4-star") {
  auto out = to_unit(intersection_graph(k13_rep()), k13_rep());
  REQUIRE(std::holds_alternative<ClawWitness>(out));
  CHECK(verify_claw(intersection_graph(k13_rep()), std::get<ClawWitness>(out)));
}

TEST_CASE("full pipeline preserves graph, order, and reaches unit lengths") {
  std::mt19937 rng(7);
  int units = 0, claws = 0;
  for (int t = 0; t < 300; ++t) {
    const Representation r = random_rep(rng, 6);
    const Graph g = intersection_graph(r);
    auto out = to_unit(g, r);
    if (std::holds_alternative<ClawWitness>(out)) {
      CHECK(verify_claw(g, std::get<ClawWitness>(out)));
      ++claws;
      continue;
    }
    const auto& res = std::get<ToUnitResult>(out);
    CHECK(is_unit(res.rep));
    CHECK(intersection_graph(res.rep) == g);
    CHECK(precedence(res.rep) == precedence(r));
    ++units;
  }
  CHECK(units > 0);
  CHECK(claws > 0);
}
