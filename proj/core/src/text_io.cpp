#include "sgm/text_io.hpp"

#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>

namespace sgm {

namespace {

std::vector<std::string> tokens_of(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

bool is_blank(const std::string& line) { return line.find_first_not_of(" \t\r") == std::string::npos; }

std::vector<std::string> default_labels(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i + 1));
  return labels;
}

std::ifstream open(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  return in;
}

struct ParsedGraph {
  Multigraph graph;
  std::vector<std::optional<int>> signs;
};

ParsedGraph parse_graph(std::istream& in, bool allow_signs) {
  ParsedGraph out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (is_blank(line)) continue;
    std::vector<std::string> tok = tokens_of(line);
    if (tok[0] == "#vertices") {
      for (std::size_t i = 1; i < tok.size(); ++i) {
        if (out.graph.find_vertex(tok[i])) throw ParseError("duplicate vertex '" + tok[i] + "'", lineno);
        out.graph.add_vertex(tok[i]);
      }
      continue;
    }
    if (tok[0][0] == '#') continue;

    std::string label;
    if (const auto colon = tok[0].find(':'); colon != std::string::npos) {
      label = tok[0].substr(0, colon);
      std::string rest = tok[0].substr(colon + 1);
      if (label.empty()) throw ParseError("empty edge label", lineno);
      if (rest.empty())
        tok.erase(tok.begin());
      else
        tok[0] = rest;
      if (tok.empty()) throw ParseError("missing edge kind", lineno);
    }

    std::optional<int> sign;
    if (allow_signs) {
      const std::string& last = tok.back();
      if (last == "+") sign = 1;
      if (last == "-" || last == "−") sign = -1;
      if (sign) tok.pop_back();
      if (tok.empty()) throw ParseError("missing edge kind", lineno);
    }

    const std::string& kind = tok[0];
    std::size_t arity = 0;
    if (kind == "link") arity = 2;
    else if (kind == "loop" || kind == "half") arity = 1;
    else if (kind != "loose") throw ParseError("unknown edge kind '" + kind + "'", lineno);
    if (tok.size() != arity + 1)
      throw ParseError("'" + kind + "' takes " + std::to_string(arity) + " vertex name(s)", lineno);

    Multigraph& g = out.graph;
    if (label.empty()) label = g.fresh_edge_label("e" + std::to_string(g.edge_count() + 1));
    try {
      if (kind == "link") {
        if (tok[1] == tok[2]) throw ParseError("link with equal ends; use 'loop'", lineno);
        const int u = g.ensure_vertex(tok[1]);
        const int v = g.ensure_vertex(tok[2]);
        g.add_link(label, u, v);
      } else if (kind == "loop") {
        g.add_loop(label, g.ensure_vertex(tok[1]));
      } else if (kind == "half") {
        g.add_half(label, g.ensure_vertex(tok[1]));
      } else {
        g.add_loose(label);
      }
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      throw ParseError(e.what(), lineno);
    }
    out.signs.push_back(sign);
  }
  return out;
}

std::string edge_line(const Multigraph& g, const Edge& e) {
  std::string line = e.label + ": " + to_string(e.kind);
  if (e.kind == EdgeKind::link) line += " " + g.vertex(e.u) + " " + g.vertex(e.v);
  if (e.kind == EdgeKind::loop || e.kind == EdgeKind::half) line += " " + g.vertex(e.u);
  return line;
}

void write_vertices(std::ostream& out, const Multigraph& g) {
  out << "#vertices";
  for (const auto& v : g.vertices()) out << ' ' << v;
  out << '\n';
}

}  // namespace

LabeledMatrix read_matrix(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  std::vector<std::string> labels;
  bool have_labels = false;
  std::optional<std::pair<std::size_t, std::size_t>> shape;
  while (!shape && std::getline(in, line)) {
    ++lineno;
    if (is_blank(line)) continue;
    std::vector<std::string> tok = tokens_of(line);
    if (tok[0] == "#labels") {
      labels.assign(tok.begin() + 1, tok.end());
      have_labels = true;
      continue;
    }
    if (tok[0][0] == '#') continue;
    if (tok.size() != 2) throw ParseError("expected '<rows> <cols>'", lineno);
    try {
      std::size_t used = 0;
      const unsigned long r = std::stoul(tok[0], &used);
      if (used != tok[0].size()) throw std::invalid_argument("rows");
      const unsigned long c = std::stoul(tok[1], &used);
      if (used != tok[1].size()) throw std::invalid_argument("cols");
      shape = {r, c};
    } catch (const std::logic_error&) {
      throw ParseError("expected '<rows> <cols>'", lineno);
    }
  }
  if (!shape) throw ParseError("missing matrix header", lineno);
  const auto [rows, cols] = *shape;
  std::vector<std::string> row_text;
  while (row_text.size() < rows && std::getline(in, line)) {
    ++lineno;
    if (is_blank(line)) continue;
    std::vector<std::string> tok = tokens_of(line);
    if (tok.size() != 1 || tok[0].size() != cols ||
        tok[0].find_first_not_of("01") != std::string::npos)
      throw ParseError("expected a row of " + std::to_string(cols) + " '0'/'1' characters", lineno);
    row_text.push_back(tok[0]);
  }
  if (row_text.size() != rows) throw ParseError("expected " + std::to_string(rows) + " rows", lineno);
  while (std::getline(in, line)) {
    ++lineno;
    if (!is_blank(line)) throw ParseError("trailing content after matrix", lineno);
  }
  if (!have_labels) labels = default_labels(cols);
  if (labels.size() != cols)
    throw ParseError("#labels names " + std::to_string(labels.size()) + " columns, matrix has " +
                         std::to_string(cols), 1);
  LabeledMatrix out;
  out.labels = std::move(labels);
  out.matrix = Gf2Matrix(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) out.matrix.set(r, c, row_text[r][c] == '1');
  return out;
}

void write_matrix(std::ostream& out, const LabeledMatrix& m) {
  out << "#labels";
  for (const auto& l : m.labels) out << ' ' << l;
  out << '\n' << m.matrix.rows() << ' ' << m.matrix.cols() << '\n';
  for (std::size_t r = 0; r < m.matrix.rows(); ++r) out << m.matrix.row_string(r) << '\n';
}

BinaryMatroid read_matroid(std::istream& in) {
  LabeledMatrix m = read_matrix(in);
  return BinaryMatroid(std::move(m.labels), m.matrix);
}

void write_matroid(std::ostream& out, const BinaryMatroid& m) {
  write_matrix(out, LabeledMatrix{m.labels(), m.representation()});
}

Multigraph read_graph(std::istream& in) { return parse_graph(in, false).graph; }

void write_graph(std::ostream& out, const Multigraph& g) {
  write_vertices(out, g);
  for (const auto& e : g.edges()) out << edge_line(g, e) << '\n';
}

SignedGraph read_signed_graph(std::istream& in) {
  ParsedGraph p = parse_graph(in, true);
  std::vector<int> signs;
  for (std::size_t i = 0; i < p.signs.size(); ++i)
    signs.push_back(p.signs[i].value_or(p.graph.edge(i).kind == EdgeKind::half ? -1 : 1));
  return SignedGraph(std::move(p.graph), std::move(signs));
}

void write_signed_graph(std::ostream& out, const SignedGraph& s) {
  const Multigraph& g = s.graph();
  write_vertices(out, g);
  for (std::size_t i = 0; i < g.edge_count(); ++i)
    out << edge_line(g, g.edge(i)) << (s.sign(i) > 0 ? " +" : " -") << '\n';
}

LabeledMatrix read_matrix_file(const std::string& path) {
  std::ifstream in = open(path);
  return read_matrix(in);
}

Multigraph read_graph_file(const std::string& path) {
  std::ifstream in = open(path);
  return read_graph(in);
}

SignedGraph read_signed_graph_file(const std::string& path) {
  std::ifstream in = open(path);
  return read_signed_graph(in);
}

}  // namespace sgm
