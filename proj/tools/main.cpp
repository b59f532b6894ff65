#include "CLI11.hpp"

#include "propunit/io.hpp"
#include "propunit/oracle.hpp"
#include "propunit/orders.hpp"
#include "propunit/sweep.hpp"
#include "propunit/transform.hpp"

#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace propunit;

namespace {

std::ifstream open_input(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ParseError(0, "cannot open " + path);
  return f;
}

// precedence: --cap flag, then PROPUNIT_CAP, then the per-operation default
int effective_cap(int flag, int fallback) {
  if (flag >= 0) return flag;
  if (const char* e = std::getenv("PROPUNIT_CAP")) {
    try {
      size_t pos = 0;
      int v = std::stoi(e, &pos);
      if (pos == std::strlen(e) && v >= 0) return v;
    } catch (...) {
    }
    throw ParseError(0, "PROPUNIT_CAP is not a nonnegative integer");
  }
  return fallback;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string join_values(const std::vector<Rational>& vals) {
  std::string out;
  for (size_t i = 0; i < vals.size(); ++i) {
    if (i) out += ", ";
    out += rational_to_string(vals[i]);
  }
  return out;
}

std::string interval_text(const Interval& iv) {
  return "[" + rational_to_string(iv.left) + ", " + rational_to_string(iv.right) + "]";
}

std::string state_text(const Representation& rep) {
  std::string out = "state:";
  for (const auto& iv : rep.intervals) out += " " + interval_text(iv);
  return out;
}

int cmd_check(const std::string& path, const std::string& kind, const std::string& format,
              int cap_flag) {
  auto f = open_input(path);
  if (kind == "rep") {
    Representation rep = parse_representation(f);
    Graph g = intersection_graph(rep);
    std::cout << "intervals: " << rep.size() << ", edges: " << g.edge_count() << "\n"
              << "proper: " << yes_no(is_proper(rep)) << ", unit: " << yes_no(is_unit(rep))
              << "\n"
              << "containment pairs: " << count_containment_pairs(rep) << "\n";
    return 0;
  }
  const int cap = effective_cap(cap_flag, 8);
  auto graphs =
      parse_graphs(f, format == "graph6" ? GraphFormat::graph6 : GraphFormat::edges);
  for (size_t i = 0; i < graphs.size(); ++i) {
    const Graph& g = graphs[i];
    std::cout << "graph " << i << ": vertices " << g.n << ", edges " << g.edge_count() << "\n";
    if (auto cw = find_claw(g))
      std::cout << "claw: center " << cw->center << " leaves " << cw->leaves[0] << " "
                << cw->leaves[1] << " " << cw->leaves[2] << "\n";
    else
      std::cout << "claw: none\n";
    if (g.n <= cap)
      std::cout << "interval: " << yes_no(interval_rep_brute(g, cap).has_value()) << "\n";
    else
      std::cout << "interval: skipped (n > cap " << cap << ")\n";
  }
  return 0;
}

int cmd_unitize(const std::string& in_path, const std::string& out_path, bool trace) {
  auto f = open_input(in_path);
  Representation rep = parse_representation(f);
  Graph g = intersection_graph(rep);
  ToUnitOutcome outcome = to_unit(g, rep);
  if (std::holds_alternative<ClawWitness>(outcome)) {
    const auto& cw = std::get<ClawWitness>(outcome);
    std::cerr << "claw: center " << cw.center << " leaves " << cw.leaves[0] << " "
              << cw.leaves[1] << " " << cw.leaves[2] << "\n";
    return 1;
  }
  const auto& res = std::get<ToUnitResult>(outcome);
  write_file_atomic(out_path, format_representation(res.rep));
  if (trace) {
    Representation cur = res.properize_trace.start;
    std::cout << "properize steps: " << res.properize_trace.steps.size() << "\n";
    if (!res.properize_trace.steps.empty()) std::cout << state_text(cur) << "\n";
    for (const auto& st : res.properize_trace.steps) {
      std::cout << "extend " << st.vertex << " "
                << (st.dir == ExtendDir::left ? "left" : "right") << " "
                << interval_text(st.from) << " -> " << interval_text(st.to) << "\n";
      cur = apply_properize_step(cur, st);
      std::cout << state_text(cur) << "\n";
    }
    std::cout << "sweep steps: " << res.sweep_steps.size() << "\n";
    for (const auto& st : res.sweep_steps) {
      if (st.expanded)
        std::cout << "pivot " << st.pivot << " " << interval_text(st.pivot_before)
                  << " expand\n";
      else
        std::cout << "pivot " << st.pivot << " " << interval_text(st.pivot_before) << " alpha "
                  << rational_to_string(st.alpha) << "\n";
      cur = apply_sweep_step(cur, st);
      std::cout << state_text(cur) << "\n";
    }
  }
  return 0;
}

int cmd_classify_poset(const std::string& path, int cap_flag) {
  auto f = open_input(path);
  Poset p = parse_poset(f);
  const int cap = effective_cap(cap_flag, 6);
  Classification c = classify(p, cap);
  switch (c.cls) {
    case OrderClass::linear_order:
      std::cout << "linear order (hence semiorder); f = " << join_values(c.values->f) << "\n";
      break;
    case OrderClass::semiorder:
      std::cout << "semiorder; f = " << join_values(c.values->f) << "\n";
      break;
    case OrderClass::interval_order: {
      const auto& w = *c.one_plus_three;
      std::cout << "interval order, not semiorder; 1+3 witness: isolated " << w.isolated
                << ", chain " << w.chain[0] << " < " << w.chain[1] << " < " << w.chain[2]
                << "\n";
      break;
    }
    case OrderClass::poset: {
      const auto& w = *c.two_plus_two;
      std::cout << "poset, not interval order; 2+2 witness: " << w.a << " < " << w.b << ", "
                << w.c << " < " << w.d << "\n";
      break;
    }
  }
  return 0;
}

int cmd_sweep(int n, const std::string& out_dir, int jobs, int cap_flag) {
  const int cap = effective_cap(cap_flag, 7);
  std::filesystem::create_directories(out_dir);
  std::ostringstream lines;
  SweepStats st = run_sweep(n, jobs, &lines, cap);
  std::ostringstream summary;
  summary << "n=" << n << " graphs=" << st.graphs << " unit_feasible=" << st.unit_feasible
          << " interval=" << st.interval << " clawed=" << st.clawed
          << " to_unit_ok=" << st.to_unit_ok << " disagreements=" << st.disagreements
          << " soundness_failures=" << st.soundness_failures
          << " witness_failures=" << st.witness_failures;
  write_file_atomic(out_dir + "/sweep_" + std::to_string(n) + ".txt", lines.str());
  write_file_atomic(out_dir + "/summary_" + std::to_string(n) + ".txt", summary.str() + "\n");
  std::cout << summary.str() << "\n";
  return st.clean() ? 0 : 1;
}

int cmd_draw(const std::string& in_path, const std::string& out_path) {
  auto f = open_input(in_path);
  Representation rep = parse_representation(f);
  write_file_atomic(out_path, render_svg(rep));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact interval representation toolkit"};
  app.require_subcommand(1);

  std::string check_path, check_kind = "rep", check_format = "edges";
  int check_cap = -1;
  auto* check = app.add_subcommand("check", "report class verdicts for a file");
  check->add_option("path", check_path, "input file")->required();
  check->add_option("--kind", check_kind, "rep or graph")
      ->check(CLI::IsMember({"rep", "graph"}));
  check->add_option("--format", check_format, "graph file format")
      ->check(CLI::IsMember({"edges", "graph6"}));
  check->add_option("--cap", check_cap, "oracle size cap");

  std::string unitize_in, unitize_out;
  bool unitize_trace = false;
  auto* unitize = app.add_subcommand("unitize", "rewrite a representation with unit lengths");
  unitize->add_option("input", unitize_in, "representation file")->required();
  unitize->add_option("output", unitize_out, "output representation file")->required();
  unitize->add_flag("--trace", unitize_trace, "print every transformation step");

  std::string classify_path;
  int classify_cap = -1;
  auto* classify_cmd = app.add_subcommand("classify-poset", "name the finest order class");
  classify_cmd->add_option("path", classify_path, "poset file")->required();
  classify_cmd->add_option("--cap", classify_cap, "oracle size cap");

  int sweep_n = 0, sweep_jobs = 1, sweep_cap = -1;
  std::string sweep_dir;
  auto* sweep = app.add_subcommand("sweep", "cross-validate all graphs on n vertices");
  sweep->add_option("n", sweep_n, "vertex count")->required();
  sweep->add_option("out_dir", sweep_dir, "report directory")->required();
  sweep->add_option("--jobs", sweep_jobs, "worker threads")->check(CLI::PositiveNumber);
  sweep->add_option("--cap", sweep_cap, "oracle size cap");

  std::string draw_in, draw_out;
  auto* draw = app.add_subcommand("draw", "render a representation as SVG");
  draw->add_option("input", draw_in, "representation file")->required();
  draw->add_option("output", draw_out, "SVG output file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (check->parsed()) return cmd_check(check_path, check_kind, check_format, check_cap);
    if (unitize->parsed()) return cmd_unitize(unitize_in, unitize_out, unitize_trace);
    if (classify_cmd->parsed()) return cmd_classify_poset(classify_path, classify_cap);
    if (sweep->parsed()) return cmd_sweep(sweep_n, sweep_dir, sweep_jobs, sweep_cap);
    if (draw->parsed()) return cmd_draw(draw_in, draw_out);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
