#include "propunit/io.hpp"

#include "propunit/oracle.hpp"

#include <filesystem>
#include <fstream>
#include <istream>
#include <sstream>

namespace propunit {

ParseError::ParseError(int line_, const std::string& msg)
    : std::runtime_error(line_ > 0 ? "line " + std::to_string(line_) + ": " + msg : msg),
      line(line_) {}

namespace {

std::vector<std::string> tokens_of(const std::string& raw) {
  std::string s = raw.substr(0, raw.find('#'));
  std::vector<std::string> out;
  std::istringstream is(s);
  std::string t;
  while (is >> t) out.push_back(t);
  return out;
}

int parse_int(const std::string& t, int line) {
  try {
    size_t pos = 0;
    int v = std::stoi(t, &pos);
    if (pos != t.size()) throw std::invalid_argument("");
    return v;
  } catch (...) {
    throw ParseError(line, "expected an integer, got '" + t + "'");
  }
}

}  // namespace

Representation parse_representation(std::istream& in) {
  struct Row {
    int id;
    Rational l, r;
    int line;
  };
  std::vector<Row> rows;
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    auto ts = tokens_of(raw);
    if (ts.empty()) continue;
    if (ts.size() != 3) throw ParseError(line_no, "expected '<id> <left> <right>'");
    int id = parse_int(ts[0], line_no);
    Rational l, r;
    try {
      l = rational_from_string(ts[1]);
      r = rational_from_string(ts[2]);
    } catch (const std::invalid_argument& e) {
      throw ParseError(line_no, e.what());
    }
    if (id < 0) throw ParseError(line_no, "negative vertex id");
    if (l > r) throw ParseError(line_no, "left endpoint exceeds right endpoint");
    rows.push_back({id, std::move(l), std::move(r), line_no});
  }
  const int n = static_cast<int>(rows.size());
  Representation rep;
  rep.intervals.assign(static_cast<size_t>(n), Interval());
  std::vector<char> seen(static_cast<size_t>(n), 0);
  for (const auto& row : rows) {
    if (row.id >= n)
      throw ParseError(row.line, "vertex id " + std::to_string(row.id) +
                                     " out of range for " + std::to_string(n) + " intervals");
    if (seen[row.id]) throw ParseError(row.line, "duplicate vertex id " + std::to_string(row.id));
    seen[row.id] = 1;
    rep.intervals[row.id] = Interval(row.l, row.r);
  }
  return rep;
}

std::string format_representation(const Representation& rep) {
  std::string out;
  for (int v = 0; v < rep.size(); ++v) {
    out += std::to_string(v);
    out += ' ';
    out += rational_to_string(rep.intervals[v].left);
    out += ' ';
    out += rational_to_string(rep.intervals[v].right);
    out += '\n';
  }
  return out;
}

Graph parse_graph6(const std::string& s0, int line_no) {
  std::string s = s0;
  const std::string prefix = ">>graph6<<";
  if (s.rfind(prefix, 0) == 0) s = s.substr(prefix.size());
  if (s.empty()) throw ParseError(line_no, "empty graph6 string");
  for (char ch : s)
    if (ch < 63 || ch > 126) throw ParseError(line_no, "invalid graph6 character");
  const int n = s[0] - 63;
  if (n == 63) throw ParseError(line_no, "graph6 long form (n >= 63) is not supported");
  const int bits = pair_count(n);
  const int need = (bits + 5) / 6;
  if (static_cast<int>(s.size()) != 1 + need)
    throw ParseError(line_no, "graph6 string has the wrong length for n=" + std::to_string(n));
  Graph g(n);
  int k = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++k)
      if ((s[1 + k / 6] - 63) >> (5 - k % 6) & 1) g.set_edge(i, j);
  for (int pad = bits; pad < need * 6; ++pad)
    if ((s[1 + pad / 6] - 63) >> (5 - pad % 6) & 1)
      throw ParseError(line_no, "nonzero padding in graph6 string");
  return g;
}

std::vector<Graph> parse_graphs(std::istream& in, GraphFormat fmt) {
  std::string raw;
  int line_no = 0;
  if (fmt == GraphFormat::graph6) {
    std::vector<Graph> out;
    while (std::getline(in, raw)) {
      ++line_no;
      auto ts = tokens_of(raw);
      if (ts.empty()) continue;
      if (ts.size() != 1) throw ParseError(line_no, "expected one graph6 string per line");
      out.push_back(parse_graph6(ts[0], line_no));
    }
    return out;
  }
  bool have_n = false;
  Graph g;
  while (std::getline(in, raw)) {
    ++line_no;
    auto ts = tokens_of(raw);
    if (ts.empty()) continue;
    if (!have_n) {
      if (ts.size() != 1) throw ParseError(line_no, "expected the vertex-count header");
      int n = parse_int(ts[0], line_no);
      if (n < 0) throw ParseError(line_no, "negative vertex count");
      g = Graph(n);
      have_n = true;
      continue;
    }
    if (ts.size() != 2) throw ParseError(line_no, "expected '<u> <v>'");
    int u = parse_int(ts[0], line_no);
    int v = parse_int(ts[1], line_no);
    if (u < 0 || v < 0 || u >= g.n || v >= g.n)
      throw ParseError(line_no, "edge endpoint out of range");
    if (u == v) throw ParseError(line_no, "self-loops are not allowed");
    g.set_edge(u, v);
  }
  if (!have_n) throw ParseError(0, "missing vertex-count header");
  return {g};
}

Poset parse_poset(std::istream& in) {
  std::string raw;
  int line_no = 0;
  bool have_n = false;
  int n = 0;
  std::vector<std::pair<int, int>> pairs;
  while (std::getline(in, raw)) {
    ++line_no;
    auto ts = tokens_of(raw);
    if (ts.empty()) continue;
    if (!have_n) {
      if (ts.size() != 1) throw ParseError(line_no, "expected the element-count header");
      n = parse_int(ts[0], line_no);
      if (n < 0) throw ParseError(line_no, "negative element count");
      have_n = true;
      continue;
    }
    int x, y;
    if (ts.size() == 2) {
      x = parse_int(ts[0], line_no);
      y = parse_int(ts[1], line_no);
    } else if (ts.size() == 3 && ts[1] == "<") {
      x = parse_int(ts[0], line_no);
      y = parse_int(ts[2], line_no);
    } else {
      throw ParseError(line_no, "expected '<x> <y>' or '<x> < <y>'");
    }
    if (x < 0 || y < 0 || x >= n || y >= n) throw ParseError(line_no, "element id out of range");
    pairs.emplace_back(x, y);
  }
  if (!have_n) throw ParseError(0, "missing element-count header");
  auto res = poset_from_relation(n, pairs);
  if (std::holds_alternative<std::vector<int>>(res)) {
    const auto& cyc = std::get<std::vector<int>>(res);
    std::string msg = "relation contains a cycle:";
    for (size_t i = 0; i < cyc.size(); ++i) msg += (i ? " < " : " ") + std::to_string(cyc[i]);
    throw ParseError(0, msg);
  }
  return std::get<Poset>(res);
}

std::string render_svg(const Representation& rep) {
  const int n = rep.size();
  const int margin = 20, plot_w = 800, row_h = 24, bar_h = 12;
  const int width = plot_w + 2 * margin;
  const int height = 2 * margin + n * row_h;
  Rational minl = 0, span = 1;
  if (n > 0) {
    minl = rep.intervals[0].left;
    Rational maxr = rep.intervals[0].right;
    for (const auto& iv : rep.intervals) {
      if (iv.left < minl) minl = iv.left;
      if (iv.right > maxr) maxr = iv.right;
    }
    span = maxr - minl;
    if (span == 0) span = 1;
  }
  const Rational scale = Rational(plot_w) / span;
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << width << " " << height
      << "\" width=\"" << width << "\" height=\"" << height << "\">\n"
      << "  <style>rect{fill:#4878a8;stroke:#20344d;stroke-width:1}"
         "text{font:10px monospace;fill:#20344d}</style>\n";
  for (int v = 0; v < n; ++v) {
    const auto& iv = rep.intervals[v];
    const Rational x = margin + (iv.left - minl) * scale;
    const Rational w = (iv.right - iv.left) * scale;
    const int y = margin + v * row_h + (row_h - bar_h) / 2;
    // zero-length intervals drawn as a 1px tick so they stay visible
    const std::string ws = w == 0 ? "1" : rational_to_decimal(w, 3);
    out << "  <rect x=\"" << rational_to_decimal(x, 3) << "\" y=\"" << y << "\" width=\"" << ws
        << "\" height=\"" << bar_h << "\"/>\n"
        << "  <text x=\"4\" y=\"" << y + bar_h - 2 << "\">" << v << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

void write_file_atomic(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    f.write(content.data(), static_cast<std::streamsize>(content.size()));
    f.flush();
    if (!f) throw std::runtime_error("short write to " + tmp.string());
  }
  fs::rename(tmp, target);
}

}  // namespace propunit
