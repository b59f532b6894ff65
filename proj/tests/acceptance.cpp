// End-to-end acceptance gate: one PASS/FAIL line per criterion, exit = #failures.
#include "propunit/io.hpp"
#include "propunit/oracle.hpp"
#include "propunit/orders.hpp"
#include "propunit/sweep.hpp"
#include "propunit/transform.hpp"

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace propunit;
namespace fs = std::filesystem;

namespace {

int failures = 0;

void report(int idx, const std::string& name, bool pass, const std::string& detail) {
  std::cout << "criterion " << idx << " (" << name << "): " << (pass ? "PASS" : "FAIL")
            << (detail.empty() ? "" : " - " + detail) << "\n"
            << std::flush;
  if (!pass) ++failures;
}

Representation random_rep(std::mt19937& rng) {
  const int n = 1 + static_cast<int>(rng() % 12);
  const int style = static_cast<int>(rng() % 3);
  Representation r;
  for (int v = 0; v < n; ++v) {
    if (v > 0 && rng() % 8 == 0) {  // occasional exact duplicate
      r.intervals.push_back(r.intervals[rng() % v]);
      continue;
    }
    long num_a, num_b;
    long den = 1;
    if (style == 0) {  // small integers, ties and zero lengths likely
      num_a = static_cast<long>(rng() % (2 * n + 1));
      num_b = static_cast<long>(rng() % (2 * n + 1));
    } else if (style == 1) {  // proper rationals
      den = 1 + static_cast<long>(rng() % 8);
      num_a = static_cast<long>(rng() % (8 * n + 1));
      num_b = static_cast<long>(rng() % (8 * n + 1));
    } else {  // wide range incl. negatives
      num_a = static_cast<long>(rng() % (6 * n + 1)) - 3 * n;
      num_b = static_cast<long>(rng() % (6 * n + 1)) - 3 * n;
    }
    Rational a(num_a, den), b(num_b, den);
    if (b < a) std::swap(a, b);
    r.intervals.emplace_back(a, b);
  }
  return r;
}

std::string read_file(const std::string& path) {
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

int run_cmd(const std::string& cmd) {
  const int rc = std::system(cmd.c_str());
  if (rc == -1) return -1;
  return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

}  // namespace

int main(int argc, char** argv) {
  // ---- shared exhaustive sweep, n = 0..7 ----
  SweepStats total;
  std::string per_n;
  for (int n = 0; n <= 7; ++n) {
    SweepStats st = run_sweep(n, 1, nullptr, 7);
    total += st;
    per_n += (n ? " " : "") + std::to_string(n) + ":" + std::to_string(st.graphs);
  }

  report(1, "theorem equivalence, exhaustive n<=7",
         total.disagreements == 0 && total.graphs == 2131020,
         "graphs=" + std::to_string(total.graphs) +
             " disagreements=" + std::to_string(total.disagreements) + " [" + per_n + "]");

  report(2, "constructive soundness",
         total.soundness_failures == 0 && total.to_unit_ok > 0,
         "to_unit_ok=" + std::to_string(total.to_unit_ok) +
             " soundness_failures=" + std::to_string(total.soundness_failures));

  // ---- randomized corpus ----
  std::mt19937 rng(20260819u);
  std::vector<Representation> corpus;
  corpus.reserve(10000);
  for (int t = 0; t < 10000; ++t) corpus.push_back(random_rep(rng));

  long steps_checked = 0;
  long violations = 0;
  for (const auto& r : corpus) {
    const Graph g = intersection_graph(r);
    auto out = properize(r);
    if (std::holds_alternative<ClawWitness>(out)) {
      if (!verify_claw(g, std::get<ClawWitness>(out))) ++violations;
      continue;
    }
    const auto& pres = std::get<ProperizeResult>(out);
    if (!(intersection_graph(pres.trace.start) == g)) ++violations;
    Representation cur = pres.trace.start;
    int pairs = count_containment_pairs(cur);
    for (const auto& st : pres.trace.steps) {
      cur = apply_properize_step(cur, st);
      ++steps_checked;
      if (!(intersection_graph(cur) == g)) ++violations;
      const int now = count_containment_pairs(cur);
      if (now != pairs - 1) ++violations;
      pairs = now;
    }
    if (!(cur == pres.rep) || !is_proper(pres.rep)) ++violations;
    UnitizeResult ur = unitize(pres.rep);
    cur = pres.rep;
    for (const auto& st : ur.steps) {
      ++steps_checked;
      if (st.expanded) {
        if (!(st.pivot_before.left == st.pivot_before.right)) ++violations;
      } else {
        const Rational a = st.pivot_before.left, b = st.pivot_before.right;
        Rational bound = a + 1;
        if (b < bound) bound = b;
        if (!(st.alpha >= a && st.alpha < bound)) ++violations;
      }
      cur = apply_sweep_step(cur, st);
      if (!(intersection_graph(cur) == g)) ++violations;
    }
    if (!(cur == ur.rep) || !is_unit(ur.rep)) ++violations;
  }
  report(3, "step-level conservation on 10^4 random representations",
         violations == 0 && corpus.size() >= 10000,
         "steps_checked=" + std::to_string(steps_checked) +
             " violations=" + std::to_string(violations));

  report(4, "claw necessity across the sweep",
         total.witness_failures == 0 && total.clawed > 0,
         "clawed=" + std::to_string(total.clawed) +
             " witness_failures=" + std::to_string(total.witness_failures));

  // ---- corollary equivalence over all posets n <= 5 ----
  long posets_checked = 0, poset_mismatches = 0;
  for (int n = 0; n <= 5; ++n) {
    for (const Poset& p : enumerate_posets(n)) {
      const bool axioms = check_semiorder_axioms(p);
      auto rep = interval_rep_of_poset(p);
      const bool oracle2 = rep.has_value() && !find_one_plus_three(p).has_value();
      Classification c = classify(p);
      const bool verdict =
          c.cls == OrderClass::linear_order || c.cls == OrderClass::semiorder;
      bool certified;
      if (verdict) {
        certified = c.values.has_value() && verify_value_function(p, *c.values);
      } else if (c.cls == OrderClass::interval_order) {
        certified = c.one_plus_three.has_value() && verify_one_plus_three(p, *c.one_plus_three);
      } else {
        certified = c.two_plus_two.has_value() && verify_two_plus_two(p, *c.two_plus_two);
      }
      if (!(verdict == axioms && verdict == oracle2 && certified)) ++poset_mismatches;
      ++posets_checked;
    }
  }
  report(5, "corollary equivalence, exhaustive n<=5",
         poset_mismatches == 0 && posets_checked == 4474,
         "posets=" + std::to_string(posets_checked) +
             " mismatches=" + std::to_string(poset_mismatches));

  // ---- golden example + bridge identity ----
  bool golden_ok = true;
  {
    Representation gin;
    gin.intervals.emplace_back(Rational(0), Rational(3));
    gin.intervals.emplace_back(Rational(2), Rational(5));
    auto out = to_unit(intersection_graph(gin), gin);
    if (!std::holds_alternative<ToUnitResult>(out)) {
      golden_ok = false;
    } else {
      const auto& res = std::get<ToUnitResult>(out);
      Representation want;
      want.intervals.emplace_back(Rational(0), Rational(1));
      want.intervals.emplace_back(Rational(2, 3), Rational(5, 3));
      golden_ok = res.rep == want && res.properize_trace.steps.empty() &&
                  res.sweep_steps.size() == 2 && res.sweep_steps[0].pivot == 0 &&
                  res.sweep_steps[0].alpha == Rational(0) && res.sweep_steps[1].pivot == 1 &&
                  res.sweep_steps[1].pivot_before == Interval(Rational(2, 3), Rational(3)) &&
                  res.sweep_steps[1].alpha == Rational(1);
    }
  }
  long bridge_failures = 0;
  for (const auto& r : corpus)
    if (!(incomparability_graph(interval_order_of(r)) == intersection_graph(r)))
      ++bridge_failures;
  report(6, "golden unitize trace and bridge identity", golden_ok && bridge_failures == 0,
         std::string("golden=") + (golden_ok ? "ok" : "bad") +
             " bridge_failures=" + std::to_string(bridge_failures));

  // ---- CLI contract ----
  bool cli_ok = true;
  std::string cli_detail;
  auto note = [&](const std::string& s) {
    cli_ok = false;
    cli_detail += (cli_detail.empty() ? "" : "; ") + s;
  };
  if (argc < 2) {
    note("missing CLI path argument");
  } else {
    const std::string cli = std::string("\"") + argv[1] + "\"";
    const fs::path dir =
        fs::temp_directory_path() / ("propunit_accept_" + std::to_string(getpid()));
    fs::create_directories(dir);
    auto at = [&](const char* name) { return (dir / name).string(); };
    {
      std::ofstream(at("proper.txt")) << "0 0 3\n1 2 5\n";
      std::ofstream(at("star.txt")) << "0 0 7\n1 0 1\n2 3 4\n3 6 7\n";
      std::ofstream(at("bad.txt")) << "0 1 0\n";
    }
    if (run_cmd(cli + " unitize " + at("proper.txt") + " " + at("unit.txt") +
                " > /dev/null 2>&1") != 0)
      note("unitize on proper input should exit 0");
    if (read_file(at("unit.txt")) != "0 0 1\n1 2/3 5/3\n") note("unitize output not golden");
    if (run_cmd(cli + " unitize " + at("star.txt") + " " + at("no.txt") + " 2> " +
                at("err.txt") + " > /dev/null") != 1)
      note("unitize on the 4-star should exit 1");
    if (read_file(at("err.txt")).find("claw: center") == std::string::npos)
      note("claw certificate missing from standard error");
    if (run_cmd(cli + " unitize " + at("bad.txt") + " " + at("no2.txt") +
                " > /dev/null 2>&1") != 2)
      note("parse failure should exit 2");
    if (run_cmd(cli + " check " + at("unit.txt") + " > " + at("chk.txt") + " 2>&1") != 0)
      note("check on unitized output should exit 0");
    const std::string chk = read_file(at("chk.txt"));
    if (chk.find("proper: yes") == std::string::npos ||
        chk.find("unit: yes") == std::string::npos)
      note("check must report proper: yes and unit: yes");
    if (run_cmd(cli + " sweep 6 " + at("sweepdir") + " > /dev/null 2>&1") != 0)
      note("sweep at n=6 should exit 0");
    long roundtrip_failures = 0;
    for (const auto& r : corpus) {
      std::istringstream in(format_representation(r));
      if (!(parse_representation(in) == r)) ++roundtrip_failures;
    }
    if (roundtrip_failures > 0)
      note("round-trip failures: " + std::to_string(roundtrip_failures));
    fs::remove_all(dir);
  }
  report(7, "CLI contract and exit codes", cli_ok, cli_ok ? "" : cli_detail);

  std::cout << (failures == 0 ? "all criteria passed" : "FAILURES: " + std::to_string(failures))
            << "\n";
  return failures;
}
