#include <algorithm>
#include <bit>
#include <deque>
#include <functional>

#include "sgm/graph.hpp"

namespace sgm {

namespace {

using VertexMask = std::uint64_t;

struct SimpleAdjacency {
  std::size_t n = 0;
  std::vector<VertexMask> adj;
};

SimpleAdjacency adjacency_of(const Multigraph& g) {
  SimpleAdjacency a;
  a.n = g.vertex_count();
  a.adj.assign(a.n, 0);
  for (const auto& e : g.edges()) {
    if (e.kind != EdgeKind::link) continue;
    a.adj[e.u] |= VertexMask{1} << e.v;
    a.adj[e.v] |= VertexMask{1} << e.u;
  }
  return a;
}

bool mask_connected(const SimpleAdjacency& g, VertexMask set) {
  if (set == 0) return false;
  VertexMask reached = set & (~set + 1);
  VertexMask frontier = reached;
  while (frontier != 0) {
    VertexMask next = 0;
    for (VertexMask f = frontier; f != 0; f &= f - 1) next |= g.adj[std::countr_zero(f)];
    next &= set & ~reached;
    reached |= next;
    frontier = next;
  }
  return reached == set;
}

std::vector<VertexMask> connected_components(const SimpleAdjacency& g) {
  std::vector<VertexMask> out;
  VertexMask left = g.n >= 64 ? ~VertexMask{0} : (VertexMask{1} << g.n) - 1;
  while (left != 0) {
    VertexMask reached = left & (~left + 1);
    VertexMask frontier = reached;
    while (frontier != 0) {
      VertexMask next = 0;
      for (VertexMask f = frontier; f != 0; f &= f - 1) next |= g.adj[std::countr_zero(f)];
      next &= ~reached;
      reached |= next;
      frontier = next;
    }
    out.push_back(reached);
    left &= ~reached;
  }
  return out;
}

// Whether H (adjacency over h vertices) is a spanning subgraph of the quotient
// whose block adjacency is `quotient`; fills `assign` with block per H vertex.
bool embeds(const SimpleAdjacency& h, const std::vector<VertexMask>& quotient,
            std::vector<int>& assign) {
  const std::size_t k = h.n;
  std::vector<int> h_order(k);
  for (std::size_t i = 0; i < k; ++i) h_order[i] = static_cast<int>(i);
  std::stable_sort(h_order.begin(), h_order.end(), [&](int a, int b) {
    return std::popcount(h.adj[a]) > std::popcount(h.adj[b]);
  });
  assign.assign(k, -1);
  VertexMask used = 0;
  std::function<bool(std::size_t)> extend = [&](std::size_t depth) -> bool {
    if (depth == k) return true;
    const int hv = h_order[depth];
    const int need = std::popcount(h.adj[hv]);
    for (std::size_t b = 0; b < k; ++b) {
      if ((used >> b) & 1U) continue;
      if (std::popcount(quotient[b]) < need) continue;
      bool ok = true;
      for (std::size_t d = 0; d < depth && ok; ++d) {
        const int prev = h_order[d];
        if ((h.adj[hv] >> prev) & 1U) ok = (quotient[b] >> assign[prev]) & 1U;
      }
      if (!ok) continue;
      assign[hv] = static_cast<int>(b);
      used |= VertexMask{1} << b;
      if (extend(depth + 1)) return true;
      used &= ~(VertexMask{1} << b);
      assign[hv] = -1;
    }
    return false;
  };
  return extend(0);
}

// Partitions the vertices of one connected component into exactly h
// connected blocks. In a connected host any minor model can absorb its unused
// vertices into neighbouring branch sets, so models using every vertex are
// enough.
std::optional<std::vector<VertexMask>> search_component(const SimpleAdjacency& g,
                                                        VertexMask component,
                                                        const SimpleAdjacency& h) {
  const std::size_t k = h.n;
  // BFS order inside the component.
  std::vector<int> order;
  {
    VertexMask seen = component & (~component + 1);
    std::deque<int> queue{std::countr_zero(seen)};
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop_front();
      order.push_back(v);
      for (VertexMask f = g.adj[v] & component & ~seen; f != 0; f &= f - 1) {
        const int w = std::countr_zero(f);
        seen |= VertexMask{1} << w;
        queue.push_back(w);
      }
    }
  }
  const std::size_t n = order.size();
  if (n < k) return std::nullopt;
  std::vector<VertexMask> blocks(k, 0);
  std::vector<int> assign;
  std::optional<std::vector<VertexMask>> found;
  std::function<bool(std::size_t, std::size_t)> place = [&](std::size_t i, std::size_t used) -> bool {
    if (n - i < k - used) return false;
    if (i == n) {
      for (std::size_t b = 0; b < k; ++b)
        if (!mask_connected(g, blocks[b])) return false;
      std::vector<VertexMask> quotient(k, 0);
      for (std::size_t b = 0; b < k; ++b) {
        VertexMask touch = 0;
        for (VertexMask f = blocks[b]; f != 0; f &= f - 1) touch |= g.adj[std::countr_zero(f)];
        for (std::size_t c = 0; c < k; ++c)
          if (c != b && (touch & blocks[c])) quotient[b] |= VertexMask{1} << c;
      }
      if (!embeds(h, quotient, assign)) return false;
      std::vector<VertexMask> model(k);
      for (std::size_t hv = 0; hv < k; ++hv) model[hv] = blocks[assign[hv]];
      found = std::move(model);
      return true;
    }
    const VertexMask bit = VertexMask{1} << order[i];
    const std::size_t limit = std::min(used + 1, k);
    for (std::size_t b = 0; b < limit; ++b) {
      blocks[b] |= bit;
      const bool done = place(i + 1, std::max(used, b + 1));
      blocks[b] &= ~bit;
      if (done) return true;
    }
    return false;
  };
  place(0, 0);
  return found;
}

}  // namespace

std::optional<std::vector<std::vector<int>>> find_minor_model(const Multigraph& g,
                                                              const Multigraph& h,
                                                              const GraphLimits& limits) {
  if (g.edge_count() > limits.edge_bound)
    throw BoundExceeded("has_graph_minor: " + std::to_string(g.edge_count()) +
                        " edges exceeds bound " + std::to_string(limits.edge_bound));
  if (!h.is_simple() || !h.is_connected())
    throw PreconditionFailed("minor target must be a simple connected graph");
  if (g.vertex_count() > 64 || h.vertex_count() > 64)
    throw BoundExceeded("has_graph_minor: more than 64 vertices");
  if (h.vertex_count() == 0) return std::vector<std::vector<int>>{};

  const SimpleAdjacency ga = adjacency_of(simplify(g));
  const SimpleAdjacency ha = adjacency_of(h);
  std::size_t h_edges = h.edge_count();
  for (VertexMask comp : connected_components(ga)) {
    if (static_cast<std::size_t>(std::popcount(comp)) < ha.n) continue;
    std::size_t comp_edges = 0;
    for (VertexMask f = comp; f != 0; f &= f - 1)
      comp_edges += static_cast<std::size_t>(std::popcount(ga.adj[std::countr_zero(f)]));
    if (comp_edges / 2 < h_edges) continue;
    if (auto model = search_component(ga, comp, ha)) {
      std::vector<std::vector<int>> out;
      for (VertexMask block : *model) {
        std::vector<int> verts;
        for (VertexMask f = block; f != 0; f &= f - 1) verts.push_back(std::countr_zero(f));
        out.push_back(std::move(verts));
      }
      return out;
    }
  }
  return std::nullopt;
}

bool has_graph_minor(const Multigraph& g, const Multigraph& h, const GraphLimits& limits) {
  return find_minor_model(g, h, limits).has_value();
}

}  // namespace sgm
