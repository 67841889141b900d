#include "sgm/catalog.hpp"

#include <charconv>

namespace sgm {

namespace {

std::string vname(char stem, int i) { return std::string(1, stem) + std::to_string(i); }

void require(bool ok, const std::string& what) {
  if (!ok) throw PreconditionFailed(what);
}

std::optional<int> parse_int(std::string_view s) {
  int value = 0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, value);
  if (ec != std::errc{} || ptr != end || s.empty()) return std::nullopt;
  return value;
}

BinaryMatroid matroid_from_rows(const std::vector<std::string>& rows) {
  std::vector<std::string_view> views(rows.begin(), rows.end());
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < rows.front().size(); ++i) labels.push_back("e" + std::to_string(i + 1));
  return BinaryMatroid(std::move(labels), Gf2Matrix::from_rows(views));
}

}  // namespace

std::string to_string(FamilyTag tag) {
  switch (tag) {
    case FamilyTag::K3n: return "K3n";
    case FamilyTag::K3nPlus1: return "K3nPlus1";
    case FamilyTag::K3nPlus2: return "K3nPlus2";
    case FamilyTag::K3nPlus3: return "K3nPlus3";
    case FamilyTag::K44minus: return "K44minus";
    case FamilyTag::K44: return "K44";
  }
  return "?";
}

std::string to_string(const FamilyName& f) {
  switch (f.tag) {
    case FamilyTag::K3n: return "K3," + std::to_string(f.n);
    case FamilyTag::K3nPlus1: return "K3," + std::to_string(f.n) + "+1";
    case FamilyTag::K3nPlus2: return "K3," + std::to_string(f.n) + "+2";
    case FamilyTag::K3nPlus3: return "K3," + std::to_string(f.n) + "+3";
    case FamilyTag::K44minus: return "K44-";
    case FamilyTag::K44: return "K44";
  }
  return "?";
}

std::optional<FamilyTag> parse_family_tag(const std::string& s) {
  for (FamilyTag t : {FamilyTag::K3n, FamilyTag::K3nPlus1, FamilyTag::K3nPlus2, FamilyTag::K3nPlus3,
                      FamilyTag::K44minus, FamilyTag::K44})
    if (to_string(t) == s) return t;
  return std::nullopt;
}

Multigraph complete_graph(int n) {
  require(n >= 1, "complete_graph needs n >= 1");
  Multigraph g;
  for (int i = 1; i <= n; ++i) g.add_vertex(vname('v', i));
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) g.add_link(vname('v', i) + vname('v', j), i - 1, j - 1);
  return g;
}

Multigraph complete_bipartite(int m, int n) {
  require(m >= 1 && n >= 1, "complete_bipartite needs m, n >= 1");
  Multigraph g;
  for (int i = 1; i <= m; ++i) g.add_vertex(vname('a', i));
  for (int j = 1; j <= n; ++j) g.add_vertex(vname('b', j));
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= n; ++j) g.add_link(vname('a', i) + vname('b', j), i - 1, m + j - 1);
  return g;
}

Multigraph wheel(int n) {
  require(n >= 3, "wheel needs a rim of at least 3 vertices");
  Multigraph g;
  const int hub = g.add_vertex("h");
  for (int i = 1; i <= n; ++i) g.add_vertex(vname('r', i));
  for (int i = 1; i <= n; ++i) g.add_link("h-" + vname('r', i), hub, i);
  for (int i = 1; i <= n; ++i) {
    const int j = i % n + 1;
    g.add_link(vname('r', i) + vname('r', j), i, j);
  }
  return g;
}

Multigraph k44_minus_e() { return delete_edge(complete_bipartite(4, 4), "a1b1"); }

Multigraph k3n_plus(int n, int i) {
  require(n >= 1, "k3n_plus needs n >= 1");
  require(i >= 0 && i <= 3, "k3n_plus adds 0 to 3 edges");
  Multigraph g = complete_bipartite(3, n);
  if (i >= 1) g.add_link("a1a2", 0, 1);
  if (i >= 2) g.add_link("a1a3", 0, 2);
  if (i >= 3) g.add_link("a2a3", 1, 2);
  return g;
}

Multigraph family_graph(const FamilyName& f) {
  switch (f.tag) {
    case FamilyTag::K44minus: return k44_minus_e();
    case FamilyTag::K44: return complete_bipartite(4, 4);
    default: break;
  }
  require(f.n >= 5, "K3,n family members need n >= 5");
  return k3n_plus(f.n, static_cast<int>(f.tag) - static_cast<int>(FamilyTag::K3n));
}

Multigraph triangular_prism() {
  Multigraph g;
  for (const char* v : {"x1", "x2", "x3", "y1", "y2", "y3"}) g.add_vertex(v);
  g.add_link("x1x2", 0, 1);
  g.add_link("x2x3", 1, 2);
  g.add_link("x1x3", 0, 2);
  g.add_link("y1y2", 3, 4);
  g.add_link("y2y3", 4, 5);
  g.add_link("y1y3", 3, 5);
  g.add_link("x1y1", 0, 3);
  g.add_link("x2y2", 1, 4);
  g.add_link("x3y3", 2, 5);
  return g;
}

Multigraph petersen() {
  Multigraph g;
  for (int i = 0; i < 5; ++i) g.add_vertex(vname('o', i));
  for (int i = 0; i < 5; ++i) g.add_vertex(vname('i', i));
  for (int i = 0; i < 5; ++i) {
    const int j = (i + 1) % 5;
    g.add_link(vname('o', i) + vname('o', j), i, j);
  }
  for (int i = 0; i < 5; ++i) g.add_link(vname('o', i) + vname('i', i), i, 5 + i);
  for (int i = 0; i < 5; ++i) {
    const int j = (i + 2) % 5;
    g.add_link(vname('i', i) + vname('i', j), 5 + i, 5 + j);
  }
  return g;
}

Multigraph cube() {
  Multigraph g;
  for (int v = 0; v < 8; ++v) g.add_vertex("q" + std::to_string(v));
  for (int v = 0; v < 8; ++v)
    for (int bit = 1; bit < 8; bit <<= 1) {
      const int w = v ^ bit;
      if (v < w) g.add_link("q" + std::to_string(v) + "q" + std::to_string(w), v, w);
    }
  return g;
}

Multigraph g17() {
  Multigraph g;
  const char* hubs[] = {"x", "y", "z"};
  for (const char* h : hubs) g.add_vertex(h);
  for (int j = 1; j <= 5; ++j) g.add_vertex("t" + std::to_string(j));
  for (int i = 0; i < 3; ++i)
    for (int j = 1; j <= 5; ++j)
      g.add_link(std::string(hubs[i]) + "t" + std::to_string(j), i, 2 + j);
  return g;
}

Multigraph g19() {
  // Cube vertices split by parity, joined across whenever the Hamming distance
  // is odd, minus the edge between 000 and 111.
  Multigraph g;
  const int even[] = {0, 3, 5, 6};
  const int odd[] = {1, 2, 4, 7};
  for (int v : even) g.add_vertex("p" + std::to_string(v));
  for (int v : odd) g.add_vertex("p" + std::to_string(v));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      if (even[i] == 0 && odd[j] == 7) continue;
      g.add_link("p" + std::to_string(even[i]) + "p" + std::to_string(odd[j]), i, 4 + j);
    }
  return g;
}

const std::vector<std::string>& r15_rows() {
  static const std::vector<std::string> rows = {
      "100000010100001", "010000000011010", "001000011001100", "000100011000110",
      "000010001111000", "000001001111100", "000000101111101",
  };
  return rows;
}

const std::vector<std::string>& r16_rows() {
  static const std::vector<std::string> rows = {
      "1000000001101000", "0100000000001110", "0010000001101110", "0001000000011100",
      "0000100011011100", "0000010010110000", "0000001011000001", "0000000110100001",
  };
  return rows;
}

BinaryMatroid r15() { return matroid_from_rows(r15_rows()); }
BinaryMatroid r16() { return matroid_from_rows(r16_rows()); }

BinaryMatroid bond_matroid(const Multigraph& g) { return dual(cycle_matroid(g)); }

namespace {

SignedGraph negate_all(const Multigraph& g) {
  std::vector<int> signs(g.edge_count(), -1);
  for (std::size_t i = 0; i < g.edge_count(); ++i)
    if (g.edge(i).kind == EdgeKind::loose) signs[i] = 1;
  return SignedGraph(g, signs);
}

SignedGraph with_negative(const Multigraph& g, std::initializer_list<const char*> labels) {
  SignedGraph s(g);
  for (const char* l : labels) s.set_sign(l, -1);
  return s;
}

Multigraph tight_handcuff() {
  Multigraph g;
  for (const char* v : {"c", "p", "q", "s", "t"}) g.add_vertex(v);
  g.add_link("cp", 0, 1);
  g.add_link("pq", 1, 2);
  g.add_link("qc", 2, 0);
  g.add_link("cs", 0, 3);
  g.add_link("st", 3, 4);
  g.add_link("tc", 4, 0);
  g.add_loop("lc", 0);
  return g;
}

Multigraph loose_handcuff() {
  Multigraph g;
  for (const char* v : {"u", "m", "w"}) g.add_vertex(v);
  g.add_loop("lu", 0);
  g.add_link("um", 0, 1);
  g.add_link("mw", 1, 2);
  g.add_loop("lw", 2);
  return g;
}

Multigraph half_edge_triangle() {
  Multigraph g;
  for (const char* v : {"u", "v", "w"}) g.add_vertex(v);
  g.add_link("uv", 0, 1);
  g.add_link("vw", 1, 2);
  g.add_link("uw", 0, 2);
  g.add_half("hu", 0);
  g.add_half("hw", 2);
  return g;
}

Multigraph mixed_kinds() {
  Multigraph g;
  for (const char* v : {"u", "v", "w", "x"}) g.add_vertex(v);
  g.add_link("uv", 0, 1);
  g.add_link("uv2", 0, 1);
  g.add_link("vw", 1, 2);
  g.add_link("wx", 2, 3);
  g.add_link("xu", 3, 0);
  g.add_loop("lv", 1);
  g.add_half("hx", 3);
  g.add_loose("z");
  return g;
}

Multigraph theta() {
  Multigraph g;
  for (const char* v : {"s", "t", "p1", "p2", "p3"}) g.add_vertex(v);
  g.add_link("sp1", 0, 2);
  g.add_link("p1t", 2, 1);
  g.add_link("sp2", 0, 3);
  g.add_link("p2t", 3, 1);
  g.add_link("sp3", 0, 4);
  g.add_link("p3t", 4, 1);
  return g;
}

}  // namespace

std::vector<std::pair<std::string, SignedGraph>> signed_corpus() {
  std::vector<std::pair<std::string, SignedGraph>> out;
  out.emplace_back("sK4-pos", SignedGraph(complete_graph(4)));
  out.emplace_back("sK4-neg", negate_all(complete_graph(4)));
  out.emplace_back("sK4-one", with_negative(complete_graph(4), {"v1v2"}));
  out.emplace_back("handcuff-tight", with_negative(tight_handcuff(), {"cp", "cs", "lc"}));
  out.emplace_back("handcuff-loose", with_negative(loose_handcuff(), {"lu", "lw"}));
  out.emplace_back("half-triangle", SignedGraph(half_edge_triangle()));
  out.emplace_back("mixed-kinds", with_negative(mixed_kinds(), {"uv", "lv"}));
  out.emplace_back("theta-neg", with_negative(theta(), {"sp1", "sp2"}));
  out.emplace_back("prism-neg", with_negative(triangular_prism(), {"x1x2", "y1y2"}));
  out.emplace_back("prism-all-neg", negate_all(triangular_prism()));
  out.emplace_back("sK33-neg", with_negative(complete_bipartite(3, 3), {"a1b1", "a2b2", "a3b3"}));
  out.emplace_back("sW4-rim", with_negative(wheel(4), {"r1r2", "r3r4"}));
  return out;
}

std::vector<std::string> catalog_names() {
  std::vector<std::string> names = {"K4",   "K5",   "K3,3", "K3,5",  "K44-",     "K44",
                                    "W5",   "G17",  "G19",  "R15",   "R16",      "prism",
                                    "cube", "petersen", "K3,5+1", "K3,5+2", "K3,5+3"};
  for (const auto& [name, s] : signed_corpus()) names.push_back(name);
  return names;
}

std::optional<CatalogEntry> catalog_lookup(const std::string& name) {
  CatalogEntry entry;
  entry.name = name;
  try {
    if (name == "G17") entry.graph = g17();
    else if (name == "G19") entry.graph = g19();
    else if (name == "R15") entry.matroid = r15();
    else if (name == "R16") entry.matroid = r16();
    else if (name == "prism") entry.graph = triangular_prism();
    else if (name == "cube") entry.graph = cube();
    else if (name == "petersen") entry.graph = petersen();
    else if (name == "K44-") entry.graph = k44_minus_e();
    else if (name == "K44") entry.graph = complete_bipartite(4, 4);
    else if (name.size() >= 2 && name[0] == 'W') {
      auto n = parse_int(std::string_view(name).substr(1));
      if (!n) return std::nullopt;
      entry.graph = wheel(*n);
    } else if (name.size() >= 2 && name[0] == 'K') {
      std::string_view rest = std::string_view(name).substr(1);
      const auto comma = rest.find(',');
      if (comma == std::string_view::npos) {
        auto n = parse_int(rest);
        if (!n) return std::nullopt;
        entry.graph = complete_graph(*n);
      } else {
        auto m = parse_int(rest.substr(0, comma));
        std::string_view tail = rest.substr(comma + 1);
        const auto plus = tail.find('+');
        auto n = parse_int(tail.substr(0, plus));
        if (!m || !n) return std::nullopt;
        if (plus == std::string_view::npos) {
          entry.graph = complete_bipartite(*m, *n);
        } else {
          auto i = parse_int(tail.substr(plus + 1));
          if (*m != 3 || !i) return std::nullopt;
          entry.graph = k3n_plus(*n, *i);
        }
      }
    } else {
      for (auto& [key, s] : signed_corpus())
        if (key == name) entry.signed_graph = s;
      if (!entry.signed_graph) return std::nullopt;
    }
  } catch (const PreconditionFailed&) {
    return std::nullopt;
  }
  return entry;
}

}  // namespace sgm
