#include "sgm/signed_graph.hpp"

#include <algorithm>
#include <deque>
#include <functional>

namespace sgm {

SignedGraph::SignedGraph(Multigraph g) : graph_(std::move(g)) {
  signs_.assign(graph_.edge_count(), +1);
  for (std::size_t i = 0; i < graph_.edge_count(); ++i)
    if (graph_.edge(i).kind == EdgeKind::half) signs_[i] = -1;
}

SignedGraph::SignedGraph(Multigraph g, std::vector<int> signs)
    : graph_(std::move(g)), signs_(std::move(signs)) {
  validate();
}

void SignedGraph::validate() const {
  if (signs_.size() != graph_.edge_count())
    throw Error("sign count does not match edge count");
  for (std::size_t i = 0; i < signs_.size(); ++i) {
    const Edge& e = graph_.edge(i);
    if (signs_[i] != 1 && signs_[i] != -1) throw Error("sign of '" + e.label + "' must be +1 or -1");
    if (e.kind == EdgeKind::half && signs_[i] != -1)
      throw PreconditionFailed("half edge '" + e.label + "' must be negative");
    if (e.kind == EdgeKind::loose && signs_[i] != 1)
      throw PreconditionFailed("loose edge '" + e.label + "' must be positive");
  }
}

void SignedGraph::set_sign(const std::string& label, int sign) {
  const std::size_t i = graph_.edge_index(label);
  const int previous = signs_[i];
  signs_[i] = sign;
  try {
    validate();
  } catch (...) {
    signs_[i] = previous;
    throw;
  }
}

int cycle_sign(const SignedGraph& s, ElementSet x) {
  const Multigraph& g = s.graph();
  if (cardinality(x) == 1) {
    const std::size_t i = members(x).front();
    if (i < g.edge_count() && g.edge(i).kind == EdgeKind::half) return -1;
  }
  if (!is_circle(g, x)) throw PreconditionFailed("edge set is not a cycle");
  int sign = 1;
  for (std::size_t i : members(x)) sign *= s.sign(i);
  return sign;
}

bool is_balanced(const SignedGraph& s) {
  // Balanced iff vertices admit a potential p with sign(uv) = p(u) p(v) on
  // every link, and there are no half edges or negative loops.
  const Multigraph& g = s.graph();
  std::vector<std::vector<std::pair<int, int>>> adj(g.vertex_count());
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const Edge& e = g.edge(i);
    if (e.kind == EdgeKind::half) return false;
    if (e.kind == EdgeKind::loop && s.sign(i) < 0) return false;
    if (e.kind != EdgeKind::link) continue;
    adj[e.u].push_back({e.v, s.sign(i)});
    adj[e.v].push_back({e.u, s.sign(i)});
  }
  std::vector<int> potential(g.vertex_count(), 0);
  for (std::size_t root = 0; root < g.vertex_count(); ++root) {
    if (potential[root] != 0) continue;
    potential[root] = 1;
    std::deque<int> queue{static_cast<int>(root)};
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop_front();
      for (auto [w, sign] : adj[v]) {
        const int want = potential[v] * sign;
        if (potential[w] == 0) {
          potential[w] = want;
          queue.push_back(w);
        } else if (potential[w] != want) {
          return false;
        }
      }
    }
  }
  return true;
}

namespace {

struct Cycle {
  ElementSet edges = 0;
  std::uint64_t vertices = 0;
};

}  // namespace

Family signed_circuits(const SignedGraph& s, const GraphLimits& limits) {
  const Multigraph& g = s.graph();
  if (g.vertex_count() > 64) throw BoundExceeded("signed_circuits: more than 64 vertices");
  std::vector<Cycle> negative;
  Family candidates;

  auto vertex_mask = [&](ElementSet x) {
    std::uint64_t mask = 0;
    for (std::size_t i : members(x)) {
      const Edge& e = g.edge(i);
      if (e.u >= 0) mask |= std::uint64_t{1} << e.u;
      if (e.v >= 0) mask |= std::uint64_t{1} << e.v;
    }
    return mask;
  };

  for (ElementSet c : circles(g, limits)) {
    int sign = 1;
    for (std::size_t i : members(c)) sign *= s.sign(i);
    if (sign > 0)
      candidates.push_back(c);
    else
      negative.push_back({c, vertex_mask(c)});
  }
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const Edge& e = g.edge(i);
    if (e.kind == EdgeKind::half) negative.push_back({singleton(i), vertex_mask(singleton(i))});
    // A loose edge has no vertices but is a positive cycle on its own.
    if (e.kind == EdgeKind::loose) candidates.push_back(singleton(i));
  }

  std::vector<std::vector<std::pair<int, std::size_t>>> adj(g.vertex_count());
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const Edge& e = g.edge(i);
    if (e.kind != EdgeKind::link) continue;
    adj[e.u].push_back({e.v, i});
    adj[e.v].push_back({e.u, i});
  }

  for (std::size_t a = 0; a < negative.size(); ++a) {
    for (std::size_t b = a + 1; b < negative.size(); ++b) {
      const Cycle& x = negative[a];
      const Cycle& y = negative[b];
      const std::uint64_t shared = x.vertices & y.vertices;
      if (std::popcount(shared) == 1) {
        candidates.push_back(x.edges | y.edges);
        continue;
      }
      if (shared != 0) continue;
      // Loose handcuffs: paths of length >= 1 from x to y whose inner
      // vertices avoid both cycles.
      const std::uint64_t blocked = x.vertices | y.vertices;
      std::function<void(int, std::uint64_t, ElementSet)> walk =
          [&](int at, std::uint64_t visited, ElementSet path) {
            for (auto [next, ei] : adj[at]) {
              const std::uint64_t bit = std::uint64_t{1} << next;
              if (y.vertices & bit) {
                candidates.push_back(x.edges | y.edges | path | singleton(ei));
                continue;
              }
              if ((blocked | visited) & bit) continue;
              walk(next, visited | bit, path | singleton(ei));
            }
          };
      for (std::uint64_t f = x.vertices; f != 0; f &= f - 1) walk(std::countr_zero(f), 0, 0);
    }
  }

  std::sort(candidates.begin(), candidates.end(), [](ElementSet p, ElementSet q) {
    return cardinality(p) != cardinality(q) ? cardinality(p) < cardinality(q) : p < q;
  });
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  Family minimal;
  for (ElementSet c : candidates) {
    const bool dominated = std::any_of(minimal.begin(), minimal.end(),
                                       [c](ElementSet d) { return is_subset(d, c); });
    if (!dominated) minimal.push_back(c);
  }
  std::sort(minimal.begin(), minimal.end(), LexLess{});
  return minimal;
}

CircuitMatroid signed_matroid(const SignedGraph& s, const GraphLimits& limits) {
  CircuitMatroid m{s.graph().edge_labels(), signed_circuits(s, limits)};
  if (!verify_axioms(m)) throw Error("signed circuit family violates the circuit axioms");
  return m;
}

}  // namespace sgm
