#include "sgm/negami.hpp"

#include <algorithm>
#include <map>

#include "sgm/recognize.hpp"

namespace sgm {

namespace {

void require_simple(const Multigraph& g, const char* what) {
  if (!g.is_simple()) throw PreconditionFailed(std::string(what) + " needs a simple graph");
}

// Degree, sorted neighbour degrees and triangle count per vertex, sorted.
using Invariant = std::vector<std::vector<int>>;

Invariant invariant_of(const Multigraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<int>> nb(n);
  for (std::size_t v = 0; v < n; ++v) nb[v] = g.neighbors(static_cast<int>(v));
  Invariant inv;
  inv.push_back({static_cast<int>(n), static_cast<int>(g.edge_count())});
  for (std::size_t v = 0; v < n; ++v) {
    std::vector<int> row{static_cast<int>(nb[v].size())};
    int triangles = 0;
    for (std::size_t i = 0; i < nb[v].size(); ++i)
      for (std::size_t j = i + 1; j < nb[v].size(); ++j)
        if (g.adjacent(nb[v][i], nb[v][j])) ++triangles;
    row.push_back(triangles);
    std::vector<int> degrees;
    for (int w : nb[v]) degrees.push_back(static_cast<int>(nb[w].size()));
    std::sort(degrees.begin(), degrees.end());
    row.insert(row.end(), degrees.begin(), degrees.end());
    inv.push_back(std::move(row));
  }
  std::sort(inv.begin() + 1, inv.end());
  return inv;
}

bool has_k5_or_k33_minor(const Multigraph& g, const GraphLimits& limits) {
  static const Multigraph k5 = complete_graph(5);
  static const Multigraph k33 = complete_bipartite(3, 3);
  const Multigraph s = simplify(g);
  if (s.vertex_count() >= 5 && s.edge_count() >= 10 && has_graph_minor(s, k5, limits)) return true;
  return s.vertex_count() >= 6 && s.edge_count() >= 9 && has_graph_minor(s, k33, limits);
}

}  // namespace

const char* to_string(Operation op) { return op == Operation::O1 ? "O1" : "O2"; }

std::vector<Extension> o1_extensions(const Multigraph& g) {
  require_simple(g, "o1_extensions");
  std::vector<Extension> out;
  const int n = static_cast<int>(g.vertex_count());
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      if (g.adjacent(u, v)) continue;
      Extension ext{g, {}};
      const std::string label = g.fresh_edge_label(g.vertex(u) + g.vertex(v));
      ext.graph.add_link(label, u, v);
      ext.step = {Operation::O1, g.vertex(u), g.vertex(v), label, {}, {}};
      out.push_back(std::move(ext));
    }
  return out;
}

std::vector<Extension> o2_splits(const Multigraph& g) {
  require_simple(g, "o2_splits");
  std::vector<Extension> out;
  const int n = static_cast<int>(g.vertex_count());
  for (int v = 0; v < n; ++v) {
    std::vector<int> nb = g.neighbors(v);
    const std::size_t d = nb.size();
    if (d < 4) continue;
    std::sort(nb.begin(), nb.end());
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << d); mask += 2) {
      const std::size_t k = static_cast<std::size_t>(std::popcount(mask));
      if (k < 2 || d - k < 2) continue;
      Extension ext{g, {}};
      Multigraph& h = ext.graph;
      const std::string name = g.fresh_vertex_name(g.vertex(v) + "'");
      const int w = h.add_vertex(name);
      ExtensionStep& step = ext.step;
      step.kind = Operation::O2;
      step.u = g.vertex(v);
      step.v = name;
      for (std::size_t i = 0; i < d; ++i) {
        const bool stays = (mask >> i) & 1U;
        (stays ? step.part1 : step.part2).push_back(g.vertex(nb[i]));
        if (stays) continue;
        for (std::size_t e = 0; e < h.edge_count(); ++e) {
          Edge& edge = h.mutable_edge(e);
          if (edge.u == v && edge.v == nb[i]) edge.u = w;
          if (edge.v == v && edge.u == nb[i]) edge.v = w;
        }
      }
      step.edge = h.fresh_edge_label(g.vertex(v) + name);
      h.add_link(step.edge, v, w);
      out.push_back(std::move(ext));
    }
  }
  return out;
}

bool is_wheel(const Multigraph& g) {
  if (!g.is_simple() || g.vertex_count() < 4) return false;
  const std::size_t rim = g.vertex_count() - 1;
  if (g.edge_count() != 2 * rim) return false;
  for (std::size_t h = 0; h < g.vertex_count(); ++h) {
    if (g.degree(static_cast<int>(h)) != rim) continue;
    bool ok = true;
    for (std::size_t v = 0; v < g.vertex_count() && ok; ++v)
      if (v != h) ok = g.degree(static_cast<int>(v)) == 3;
    if (ok && delete_vertex(g, g.vertex(h)).is_connected()) return true;
  }
  return false;
}

std::vector<ClosureEntry> negami_closure(const Multigraph& h, std::size_t max_edges,
                                         const ClosureLimits& limits) {
  require_simple(h, "negami_closure");
  if (h.vertex_count() < 4 || !is_three_connected_simple(h))
    throw PreconditionFailed("negami_closure: seed is not 3-connected");
  if (is_wheel(h)) throw PreconditionFailed("negami_closure: seed is a wheel");

  std::vector<ClosureEntry> closure{{h, std::nullopt, std::nullopt}};
  std::map<Invariant, std::vector<std::size_t>> buckets;
  buckets[invariant_of(h)].push_back(0);

  for (std::size_t i = 0; i < closure.size(); ++i) {
    if (closure[i].graph.edge_count() >= max_edges) continue;
    std::vector<Extension> next = o1_extensions(closure[i].graph);
    std::vector<Extension> splits = o2_splits(closure[i].graph);
    next.insert(next.end(), std::make_move_iterator(splits.begin()),
                std::make_move_iterator(splits.end()));
    for (Extension& ext : next) {
      std::vector<std::size_t>& bucket = buckets[invariant_of(ext.graph)];
      const bool seen = std::any_of(bucket.begin(), bucket.end(), [&](std::size_t j) {
        return graph_iso(ext.graph, closure[j].graph).has_value();
      });
      if (seen) continue;
      if (!is_three_connected_simple(ext.graph))
        throw Error("negami_closure: extension lost 3-connectivity");
      if (!has_graph_minor(ext.graph, h)) throw Error("negami_closure: extension lost the seed minor");
      bucket.push_back(closure.size());
      closure.push_back({std::move(ext.graph), i, std::move(ext.step)});
      if (closure.size() > limits.max_graphs)
        throw BoundExceeded("negami_closure: more than " + std::to_string(limits.max_graphs) +
                            " graphs");
    }
  }
  return closure;
}

std::vector<ExtensionStep> provenance(const std::vector<ClosureEntry>& closure, std::size_t i) {
  std::vector<ExtensionStep> chain;
  for (std::optional<std::size_t> at = i; at && closure.at(*at).step; at = closure[*at].parent)
    chain.push_back(*closure[*at].step);
  std::reverse(chain.begin(), chain.end());
  return chain;
}

bool condition_iii(const Multigraph& g, const GraphLimits& limits) {
  if (g.edge_count() > limits.edge_bound)
    throw BoundExceeded("condition_iii: " + std::to_string(g.edge_count()) +
                        " edges exceeds bound " + std::to_string(limits.edge_bound));
  for (ElementSet x : circles(g, limits))
    if (has_k5_or_k33_minor(contract_circle(g, x), limits)) return false;
  return true;
}

FamilyConditions family_conditions(const Multigraph& g, const GraphLimits& limits) {
  static const Multigraph k35 = complete_bipartite(3, 5);
  static const Multigraph k44m = k44_minus_e();
  FamilyConditions c;
  if (g.is_simple() && g.vertex_count() >= 4) {
    c.three_connected = is_three_connected_simple(g);
  } else if (g.is_connected()) {
    const auto k = tutte_connectivity(g, limits);
    c.three_connected = !k || *k >= 3;
  }
  c.g17_or_g19_minor = has_graph_minor(g, k35, limits) || has_graph_minor(g, k44m, limits);
  c.contraction_condition = condition_iii(g, limits);
  return c;
}

bool FamilyVerification::passed() const {
  return counterexamples.empty() &&
         std::all_of(members.begin(), members.end(),
                     [](const FamilyCheck& c) { return c.conditions.all() && c.member; });
}

FamilyVerification verify_family_theorems(int n_max, std::size_t edge_budget,
                                          const ClosureLimits& limits) {
  if (n_max > 7) throw BoundExceeded("verify_family_theorems: n_max above 7");
  FamilyVerification report;
  std::vector<FamilyName> names;
  for (int n = 5; n <= n_max; ++n)
    for (FamilyTag t : {FamilyTag::K3n, FamilyTag::K3nPlus1, FamilyTag::K3nPlus2, FamilyTag::K3nPlus3})
      names.push_back({t, n});
  names.push_back({FamilyTag::K44minus, 4});
  names.push_back({FamilyTag::K44, 4});
  for (const FamilyName& f : names) {
    Multigraph g = family_graph(f);
    FamilyCheck check{to_string(f), g, family_conditions(g), family_membership(g)};
    report.members.push_back(std::move(check));
  }

  auto sweep = [&](const Multigraph& seed, const std::string& stem) {
    const std::vector<ClosureEntry> closure = negami_closure(seed, edge_budget, limits);
    for (std::size_t i = 0; i < closure.size(); ++i) {
      const Multigraph& g = closure[i].graph;
      FamilyCheck check{stem + "#" + std::to_string(i), g, family_conditions(g), family_membership(g)};
      if (check.conditions.all()) ++report.satisfying;
      if (check.conditions.all() != check.member.has_value())
        report.counterexamples.push_back(std::move(check));
    }
    return closure.size();
  };
  report.l_closure_size = sweep(complete_bipartite(3, 5), "K3,5");
  report.m_closure_size = sweep(k44_minus_e(), "K44-");
  return report;
}

}  // namespace sgm
