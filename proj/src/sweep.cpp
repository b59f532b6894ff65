#include "propunit/sweep.hpp"

#include "propunit/oracle.hpp"
#include "propunit/transform.hpp"

#include <algorithm>
#include <atomic>
#include <ostream>
#include <string>
#include <thread>
#include <variant>
#include <vector>

namespace propunit {

SweepStats& SweepStats::operator+=(const SweepStats& o) {
  graphs += o.graphs;
  unit_feasible += o.unit_feasible;
  interval += o.interval;
  clawed += o.clawed;
  to_unit_ok += o.to_unit_ok;
  disagreements += o.disagreements;
  soundness_failures += o.soundness_failures;
  witness_failures += o.witness_failures;
  return *this;
}

namespace {

void check_one(int n, std::uint64_t mask, int cap, SweepStats& st, std::string* line) {
  Graph g = graph_from_mask(n, mask);
  ++st.graphs;
  auto claw = find_claw(g);
  if (claw) {
    ++st.clawed;
    if (!verify_claw(g, *claw)) ++st.witness_failures;
  }
  auto brute = interval_rep_brute(g, std::max(cap, 8));
  if (brute) ++st.interval;
  auto unit = unit_rep_feasible(g, cap);
  if (unit) ++st.unit_feasible;

  const bool a = unit.has_value();
  const bool b = brute.has_value() && !claw;
  bool c = false;
  const char* tu = "skip";
  if (brute) {
    auto outcome = to_unit(g, *brute);
    if (std::holds_alternative<ToUnitResult>(outcome)) {
      c = true;
      tu = "unit";
      ++st.to_unit_ok;
      if (!verify_unit_rep(g, std::get<ToUnitResult>(outcome).rep)) ++st.soundness_failures;
      if (claw) ++st.witness_failures;  // a claw was present but never surfaced
    } else {
      tu = "claw";
      if (!verify_claw(g, std::get<ClawWitness>(outcome))) ++st.witness_failures;
    }
  }
  const bool agree = a == b && b == c;
  if (!agree) ++st.disagreements;
  if (line) {
    line->clear();
    *line += std::to_string(mask);
    *line += a ? " A=1" : " A=0";
    *line += b ? " B=1" : " B=0";
    *line += c ? " C=1" : " C=0";
    *line += " to_unit=";
    *line += tu;
    *line += agree ? " agree=1\n" : " agree=0\n";
  }
}

}  // namespace

SweepStats run_sweep(int n, int jobs, std::ostream* lines, int cap) {
  if (n < 0 || n > cap) throw CapExceeded("sweep cap exceeded: n=" + std::to_string(n));
  const std::uint64_t total = std::uint64_t(1) << pair_count(n);
  SweepStats st;
  if (jobs <= 1) {
    std::string line;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
      check_one(n, mask, cap, st, lines ? &line : nullptr);
      if (lines) *lines << line;
    }
    return st;
  }
  const std::uint64_t chunk =
      std::max<std::uint64_t>(1, total / (static_cast<std::uint64_t>(jobs) * 16));
  const std::uint64_t nchunks = (total + chunk - 1) / chunk;
  std::vector<SweepStats> cstats(nchunks);
  std::vector<std::string> cbuf(lines ? nchunks : 0);
  std::atomic<std::uint64_t> next{0};
  auto worker = [&]() {
    std::string line;
    for (;;) {
      std::uint64_t ci = next.fetch_add(1);
      if (ci >= nchunks) break;
      const std::uint64_t lo = ci * chunk;
      const std::uint64_t hi = std::min(total, lo + chunk);
      for (std::uint64_t mask = lo; mask < hi; ++mask) {
        check_one(n, mask, cap, cstats[ci], lines ? &line : nullptr);
        if (lines) cbuf[ci] += line;
      }
    }
  };
  std::vector<std::thread> threads;
  for (int t = 0; t < jobs; ++t) threads.emplace_back(worker);
  for (auto& t : threads) t.join();
  for (std::uint64_t ci = 0; ci < nchunks; ++ci) {
    st += cstats[ci];
    if (lines) *lines << cbuf[ci];
  }
  return st;
}

}  // namespace propunit
