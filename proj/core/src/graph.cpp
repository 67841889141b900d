#include "sgm/graph.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>
#include <unordered_set>

namespace sgm {

const char* to_string(EdgeKind kind) {
  switch (kind) {
    case EdgeKind::link: return "link";
    case EdgeKind::loop: return "loop";
    case EdgeKind::half: return "half";
    case EdgeKind::loose: return "loose";
  }
  return "?";
}

int Multigraph::add_vertex(const std::string& name) {
  if (name.empty()) throw Error("empty vertex name");
  if (find_vertex(name)) throw Error("duplicate vertex '" + name + "'");
  vertices_.push_back(name);
  return static_cast<int>(vertices_.size() - 1);
}

int Multigraph::ensure_vertex(const std::string& name) {
  if (auto v = find_vertex(name)) return *v;
  return add_vertex(name);
}

void Multigraph::check_label(const std::string& label) const {
  if (label.empty()) throw Error("empty edge label");
  if (has_edge_label(label)) throw Error("duplicate edge label '" + label + "'");
}

void Multigraph::check_vertex(int v) const {
  if (v < 0 || static_cast<std::size_t>(v) >= vertices_.size())
    throw Error("vertex index " + std::to_string(v) + " out of range");
}

void Multigraph::add_link(const std::string& label, int u, int v) {
  check_label(label);
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw Error("link '" + label + "' needs two distinct ends");
  edges_.push_back({label, EdgeKind::link, u, v});
}

void Multigraph::add_link(const std::string& label, const std::string& u, const std::string& v) {
  const int a = ensure_vertex(u);
  const int b = ensure_vertex(v);
  add_link(label, a, b);
}

void Multigraph::add_loop(const std::string& label, int v) {
  check_label(label);
  check_vertex(v);
  edges_.push_back({label, EdgeKind::loop, v, v});
}

void Multigraph::add_half(const std::string& label, int v) {
  check_label(label);
  check_vertex(v);
  edges_.push_back({label, EdgeKind::half, v, -1});
}

void Multigraph::add_loose(const std::string& label) {
  check_label(label);
  edges_.push_back({label, EdgeKind::loose, -1, -1});
}

std::optional<int> Multigraph::find_vertex(const std::string& name) const {
  const auto it = std::find(vertices_.begin(), vertices_.end(), name);
  if (it == vertices_.end()) return std::nullopt;
  return static_cast<int>(it - vertices_.begin());
}

int Multigraph::vertex_index(const std::string& name) const {
  if (auto v = find_vertex(name)) return *v;
  throw UnknownLabel(name);
}

std::size_t Multigraph::edge_index(const std::string& label) const {
  for (std::size_t i = 0; i < edges_.size(); ++i)
    if (edges_[i].label == label) return i;
  throw UnknownLabel(label);
}

bool Multigraph::has_edge_label(const std::string& label) const {
  return std::any_of(edges_.begin(), edges_.end(), [&](const Edge& e) { return e.label == label; });
}

std::vector<std::string> Multigraph::edge_labels() const {
  std::vector<std::string> out;
  out.reserve(edges_.size());
  for (const auto& e : edges_) out.push_back(e.label);
  return out;
}

ElementSet Multigraph::edge_set(const std::vector<std::string>& labels) const {
  ElementSet s = 0;
  for (const auto& l : labels) s |= singleton(edge_index(l));
  return s;
}

std::vector<std::string> Multigraph::labels_of(ElementSet s) const {
  std::vector<std::string> out;
  for (std::size_t i : members(s)) out.push_back(edges_.at(i).label);
  return out;
}

std::size_t Multigraph::degree(int v) const {
  std::size_t d = 0;
  for (const auto& e : edges_) {
    if (e.kind == EdgeKind::loop && e.u == v) d += 2;
    else if (e.kind == EdgeKind::link && (e.u == v || e.v == v)) d += 1;
    else if (e.kind == EdgeKind::half && e.u == v) d += 1;
  }
  return d;
}

std::vector<int> Multigraph::neighbors(int v) const {
  std::vector<int> out;
  for (const auto& e : edges_) {
    if (e.kind != EdgeKind::link) continue;
    if (e.u == v) out.push_back(e.v);
    else if (e.v == v) out.push_back(e.u);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::size_t Multigraph::link_multiplicity(int u, int v) const {
  return static_cast<std::size_t>(std::count_if(edges_.begin(), edges_.end(), [&](const Edge& e) {
    return e.kind == EdgeKind::link && ((e.u == u && e.v == v) || (e.u == v && e.v == u));
  }));
}

bool Multigraph::adjacent(int u, int v) const { return link_multiplicity(u, v) > 0; }

bool Multigraph::is_simple() const {
  std::set<std::pair<int, int>> seen;
  for (const auto& e : edges_) {
    if (e.kind != EdgeKind::link) return false;
    if (!seen.insert(std::minmax(e.u, e.v)).second) return false;
  }
  return true;
}

bool Multigraph::is_connected() const {
  if (vertices_.empty()) return true;
  std::vector<std::vector<int>> adj(vertices_.size());
  for (const auto& e : edges_)
    if (e.kind == EdgeKind::link) {
      adj[e.u].push_back(e.v);
      adj[e.v].push_back(e.u);
    }
  std::vector<bool> seen(vertices_.size(), false);
  std::deque<int> queue{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!queue.empty()) {
    const int x = queue.front();
    queue.pop_front();
    for (int y : adj[x])
      if (!seen[y]) {
        seen[y] = true;
        ++count;
        queue.push_back(y);
      }
  }
  return count == vertices_.size();
}

std::string Multigraph::fresh_edge_label(const std::string& stem) const {
  if (!has_edge_label(stem)) return stem;
  for (std::size_t i = 1;; ++i) {
    std::string candidate = stem + "_" + std::to_string(i);
    if (!has_edge_label(candidate)) return candidate;
  }
}

std::string Multigraph::fresh_vertex_name(const std::string& stem) const {
  if (!find_vertex(stem)) return stem;
  for (std::size_t i = 1;; ++i) {
    std::string candidate = stem + "_" + std::to_string(i);
    if (!find_vertex(candidate)) return candidate;
  }
}

void Multigraph::remove_edges(ElementSet doomed) {
  std::vector<Edge> kept;
  for (std::size_t i = 0; i < edges_.size(); ++i)
    if (!contains(doomed, i)) kept.push_back(edges_[i]);
  edges_ = std::move(kept);
}

void Multigraph::remove_vertex_index(int v) {
  check_vertex(v);
  for (const auto& e : edges_)
    if (e.u == v || e.v == v) throw Error("vertex still has incident edges");
  vertices_.erase(vertices_.begin() + v);
  for (auto& e : edges_) {
    if (e.u > v) --e.u;
    if (e.v > v) --e.v;
  }
}

Multigraph delete_edge(const Multigraph& g, const std::string& label) {
  Multigraph out = g;
  out.remove_edges(singleton(g.edge_index(label)));
  return out;
}

Multigraph delete_vertex(const Multigraph& g, const std::string& vertex) {
  const int v = g.vertex_index(vertex);
  ElementSet incident = 0;
  for (std::size_t i = 0; i < g.edge_count(); ++i)
    if (g.edge(i).u == v || g.edge(i).v == v) incident |= singleton(i);
  Multigraph out = g;
  out.remove_edges(incident);
  out.remove_vertex_index(v);
  return out;
}

Multigraph contract_edge(const Multigraph& g, const std::string& label) {
  const std::size_t idx = g.edge_index(label);
  const Edge target = g.edge(idx);
  Multigraph out = g;
  out.remove_edges(singleton(idx));
  switch (target.kind) {
    case EdgeKind::loose:
      return out;
    case EdgeKind::link: {
      const int keep = target.u;
      const int gone = target.v;
      for (std::size_t i = 0; i < out.edge_count(); ++i) {
        Edge& e = out.mutable_edge(i);
        if (e.u == gone) e.u = keep;
        if (e.v == gone) e.v = keep;
        if (e.kind == EdgeKind::link && e.u == e.v) e.kind = EdgeKind::loop;
      }
      out.remove_vertex_index(gone);
      return out;
    }
    case EdgeKind::loop:
    case EdgeKind::half: {
      const int v = target.u;
      ElementSet doomed = 0;
      for (std::size_t i = 0; i < out.edge_count(); ++i) {
        Edge& e = out.mutable_edge(i);
        if ((e.kind == EdgeKind::half || e.kind == EdgeKind::loop) && e.u == v) {
          doomed |= singleton(i);
        } else if (e.kind == EdgeKind::link && (e.u == v || e.v == v)) {
          const int other = e.u == v ? e.v : e.u;
          e = Edge{e.label, EdgeKind::half, other, -1};
        }
      }
      out.remove_edges(doomed);
      out.remove_vertex_index(v);
      return out;
    }
  }
  return out;
}

namespace {

void check_edge_bound(const Multigraph& g, const GraphLimits& limits, const char* what) {
  if (g.edge_count() > limits.edge_bound || g.edge_count() > kMaxGroundSet)
    throw BoundExceeded(std::string(what) + ": " + std::to_string(g.edge_count()) +
                        " edges exceeds bound " + std::to_string(limits.edge_bound));
}

}  // namespace

std::vector<ElementSet> circles(const Multigraph& g, const GraphLimits& limits) {
  check_edge_bound(g, limits, "circles");
  const std::size_t m = g.edge_count();
  std::vector<ElementSet> out;
  // incident[v] = link edge indices at v
  std::vector<std::vector<std::size_t>> incident(g.vertex_count());
  for (std::size_t i = 0; i < m; ++i) {
    const Edge& e = g.edge(i);
    if (e.kind == EdgeKind::loop) out.push_back(singleton(i));
    if (e.kind != EdgeKind::link) continue;
    incident[e.u].push_back(i);
    incident[e.v].push_back(i);
  }
  std::vector<bool> on_path(g.vertex_count(), false);
  for (std::size_t first = 0; first < m; ++first) {
    const Edge& start = g.edge(first);
    if (start.kind != EdgeKind::link) continue;
    // Paths from start.v back to start.u through edges with larger index.
    const int goal = start.u;
    std::function<void(int, ElementSet)> walk = [&](int at, ElementSet used) {
      for (std::size_t ei : incident[at]) {
        if (ei <= first) continue;
        const Edge& e = g.edge(ei);
        const int next = e.u == at ? e.v : e.u;
        if (next == goal) {
          out.push_back(used | singleton(ei));
          continue;
        }
        if (on_path[next]) continue;
        on_path[next] = true;
        walk(next, used | singleton(ei));
        on_path[next] = false;
      }
    };
    on_path[goal] = true;
    on_path[start.v] = true;
    walk(start.v, singleton(first));
    on_path[goal] = false;
    on_path[start.v] = false;
  }
  std::sort(out.begin(), out.end(), LexLess{});
  return out;
}

bool is_circle(const Multigraph& g, ElementSet x) {
  if (x == 0 || !is_subset(x, full_set(g.edge_count()))) return false;
  const auto idx = members(x);
  if (idx.size() == 1) return g.edge(idx[0]).kind == EdgeKind::loop;
  std::map<int, int> deg;
  std::map<int, std::vector<int>> adj;
  for (std::size_t i : idx) {
    const Edge& e = g.edge(i);
    if (e.kind != EdgeKind::link) return false;
    ++deg[e.u];
    ++deg[e.v];
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  for (auto [v, d] : deg)
    if (d != 2) return false;
  std::set<int> seen{deg.begin()->first};
  std::deque<int> queue{deg.begin()->first};
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    for (int w : adj[v])
      if (seen.insert(w).second) queue.push_back(w);
  }
  return seen.size() == deg.size();
}

Multigraph contract_circle(const Multigraph& g, ElementSet x) {
  if (!is_circle(g, x)) throw PreconditionFailed("edge set is not a circle");
  std::vector<bool> merged(g.vertex_count(), false);
  for (std::size_t i : members(x)) {
    merged[g.edge(i).u] = true;
    merged[g.edge(i).v] = true;
  }
  int rep = -1;
  std::vector<int> remap(g.vertex_count(), -1);
  Multigraph out;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (merged[v]) {
      if (rep < 0) rep = out.add_vertex(g.vertex(v));
      remap[v] = rep;
    } else {
      remap[v] = out.add_vertex(g.vertex(v));
    }
  }
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    if (contains(x, i)) continue;
    const Edge& e = g.edge(i);
    switch (e.kind) {
      case EdgeKind::link:
        if (remap[e.u] == remap[e.v])
          out.add_loop(e.label, remap[e.u]);
        else
          out.add_link(e.label, remap[e.u], remap[e.v]);
        break;
      case EdgeKind::loop: out.add_loop(e.label, remap[e.u]); break;
      case EdgeKind::half: out.add_half(e.label, remap[e.u]); break;
      case EdgeKind::loose: out.add_loose(e.label); break;
    }
  }
  return out;
}

std::optional<std::size_t> tutte_connectivity(const Multigraph& g, const GraphLimits& limits) {
  check_edge_bound(g, limits, "tutte_connectivity");
  if (!g.is_connected()) throw PreconditionFailed("tutte_connectivity needs a connected graph");
  const std::size_t m = g.edge_count();
  if (m < 2) return std::nullopt;
  if (g.vertex_count() > 64) throw BoundExceeded("tutte_connectivity: more than 64 vertices");
  std::vector<std::uint64_t> ends(m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    const Edge& e = g.edge(i);
    if (e.u >= 0) ends[i] |= std::uint64_t{1} << e.u;
    if (e.v >= 0) ends[i] |= std::uint64_t{1} << e.v;
  }
  const ElementSet ground = full_set(m);
  const ElementSet rest = ground & ~ElementSet{1};
  std::optional<std::size_t> best;
  for (ElementSet sub = 0;; sub = (sub - rest) & rest) {
    const ElementSet a = sub | 1U;
    if (a != ground) {
      std::uint64_t va = 0;
      std::uint64_t vb = 0;
      for (std::size_t i = 0; i < m; ++i) (contains(a, i) ? va : vb) |= ends[i];
      const std::size_t shared = static_cast<std::size_t>(std::popcount(va & vb));
      const std::size_t k = std::max<std::size_t>(shared, 1);
      const std::size_t smaller = std::min(cardinality(a), m - cardinality(a));
      if (smaller >= k && (!best || k < *best)) {
        best = k;
        if (k == 1) break;
      }
    }
    if (sub == rest) break;
  }
  return best;
}

bool is_three_connected_simple(const Multigraph& g) {
  const std::size_t n = g.vertex_count();
  if (n < 4 || !g.is_simple()) return false;
  std::vector<std::vector<int>> adj(n);
  for (const auto& e : g.edges()) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  auto connected_without = [&](int x, int y) {
    std::vector<bool> seen(n, false);
    seen[x] = true;
    if (y >= 0) seen[y] = true;
    int start = 0;
    while (seen[start]) ++start;
    std::deque<int> queue{start};
    seen[start] = true;
    std::size_t count = 1;
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop_front();
      for (int w : adj[v])
        if (!seen[w]) {
          seen[w] = true;
          ++count;
          queue.push_back(w);
        }
    }
    return count == n - (y >= 0 ? 2 : 1);
  };
  if (!g.is_connected()) return false;
  for (int x = 0; x < static_cast<int>(n); ++x)
    for (int y = x + 1; y < static_cast<int>(n); ++y)
      if (!connected_without(x, y)) return false;
  return true;
}

std::optional<std::vector<int>> graph_iso(const Multigraph& g, const Multigraph& h) {
  const std::size_t n = g.vertex_count();
  if (n != h.vertex_count() || g.edge_count() != h.edge_count()) return std::nullopt;

  struct Profile {
    std::vector<std::vector<std::size_t>> mult;  // link multiplicities
    std::vector<std::size_t> loops, halves;
    std::size_t loose = 0;
    std::vector<std::vector<std::size_t>> signature;
  };
  auto profile = [n](const Multigraph& x) {
    Profile p;
    p.mult.assign(n, std::vector<std::size_t>(n, 0));
    p.loops.assign(n, 0);
    p.halves.assign(n, 0);
    for (const auto& e : x.edges()) {
      switch (e.kind) {
        case EdgeKind::link:
          ++p.mult[e.u][e.v];
          ++p.mult[e.v][e.u];
          break;
        case EdgeKind::loop: ++p.loops[e.u]; break;
        case EdgeKind::half: ++p.halves[e.u]; break;
        case EdgeKind::loose: ++p.loose; break;
      }
    }
    p.signature.resize(n);
    for (std::size_t v = 0; v < n; ++v) {
      std::vector<std::size_t> row;
      for (std::size_t w = 0; w < n; ++w)
        if (p.mult[v][w] > 0) row.push_back(p.mult[v][w]);
      std::sort(row.begin(), row.end());
      row.insert(row.begin(), {p.loops[v], p.halves[v]});
      p.signature[v] = std::move(row);
    }
    return p;
  };
  const Profile pg = profile(g);
  const Profile ph = profile(h);
  if (pg.loose != ph.loose) return std::nullopt;
  {
    auto a = pg.signature;
    auto b = ph.signature;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return std::nullopt;
  }
  // BFS order over g so that most vertices have mapped neighbours.
  std::vector<int> order;
  std::vector<bool> queued(n, false);
  for (std::size_t s = 0; s < n; ++s) {
    if (queued[s]) continue;
    std::deque<int> queue{static_cast<int>(s)};
    queued[s] = true;
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop_front();
      order.push_back(v);
      for (std::size_t w = 0; w < n; ++w)
        if (pg.mult[v][w] > 0 && !queued[w]) {
          queued[w] = true;
          queue.push_back(static_cast<int>(w));
        }
    }
  }
  std::vector<int> image(n, -1);
  std::vector<bool> used(n, false);
  std::function<bool(std::size_t)> extend = [&](std::size_t depth) -> bool {
    if (depth == n) return true;
    const int v = order[depth];
    for (std::size_t w = 0; w < n; ++w) {
      if (used[w] || pg.signature[v] != ph.signature[w]) continue;
      bool ok = true;
      for (std::size_t d = 0; d < depth && ok; ++d) {
        const int pv = order[d];
        ok = pg.mult[v][pv] == ph.mult[w][image[pv]];
      }
      if (!ok) continue;
      image[v] = static_cast<int>(w);
      used[w] = true;
      if (extend(depth + 1)) return true;
      used[w] = false;
      image[v] = -1;
    }
    return false;
  };
  if (!extend(0)) return std::nullopt;
  return image;
}

BinaryMatroid cycle_matroid(const Multigraph& g) {
  Gf2Matrix incidence(g.vertex_count(), g.edge_count());
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const Edge& e = g.edge(i);
    if (e.kind != EdgeKind::link)
      throw PreconditionFailed("cycle matroid needs a graph of links only; edge '" + e.label +
                               "' is a " + to_string(e.kind));
    incidence.set(static_cast<std::size_t>(e.u), i, true);
    incidence.set(static_cast<std::size_t>(e.v), i, true);
  }
  return BinaryMatroid(g.edge_labels(), incidence);
}

std::optional<std::pair<std::vector<int>, std::vector<int>>> bipartition(const Multigraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<int> color(n, -1);
  std::vector<std::vector<int>> adj(n);
  for (const auto& e : g.edges()) {
    if (e.kind == EdgeKind::loop) return std::nullopt;
    if (e.kind != EdgeKind::link) continue;
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  for (std::size_t s = 0; s < n; ++s) {
    if (color[s] >= 0) continue;
    color[s] = 0;
    std::deque<int> queue{static_cast<int>(s)};
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop_front();
      for (int w : adj[v]) {
        if (color[w] < 0) {
          color[w] = 1 - color[v];
          queue.push_back(w);
        } else if (color[w] == color[v]) {
          return std::nullopt;
        }
      }
    }
  }
  std::pair<std::vector<int>, std::vector<int>> sides;
  for (std::size_t v = 0; v < n; ++v)
    (color[v] == 0 ? sides.first : sides.second).push_back(static_cast<int>(v));
  return sides;
}

Multigraph simplify(const Multigraph& g) {
  Multigraph out;
  for (const auto& v : g.vertices()) out.add_vertex(v);
  std::set<std::pair<int, int>> seen;
  for (const auto& e : g.edges()) {
    if (e.kind != EdgeKind::link) continue;
    if (seen.insert(std::minmax(e.u, e.v)).second) out.add_link(e.label, e.u, e.v);
  }
  return out;
}

}  // namespace sgm
