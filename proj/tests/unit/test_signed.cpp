#include <gtest/gtest.h>

#include <map>

#include "oracles.hpp"
#include "sgm/catalog.hpp"
#include "sgm/signed_graph.hpp"

using namespace sgm;

namespace {

// Frame-matroid rank: |V| minus the number of balanced components of (V, S).
// A component is unbalanced when it holds a half edge, a negative loop or a
// cycle whose sign product is negative.
std::size_t frame_rank(const SignedGraph& s, ElementSet set) {
  const Multigraph& g = s.graph();
  const int n = static_cast<int>(g.vertex_count());
  std::vector<std::vector<std::pair<int, int>>> adj(n);
  std::vector<bool> unbalanced_at(n, false);
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    if (!contains(set, i)) continue;
    const Edge& e = g.edge(i);
    if (e.kind == EdgeKind::link) {
      adj[e.u].push_back({e.v, s.sign(i)});
      adj[e.v].push_back({e.u, s.sign(i)});
    } else if (e.kind == EdgeKind::half || (e.kind == EdgeKind::loop && s.sign(i) < 0)) {
      unbalanced_at[e.u] = true;
    }
  }
  std::vector<int> potential(n, 0);
  std::size_t balanced = 0;
  for (int root = 0; root < n; ++root) {
    if (potential[root] != 0) continue;
    potential[root] = 1;
    bool ok = true;
    std::vector<int> stack = {root};
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      if (unbalanced_at[v]) ok = false;
      for (auto [w, sign] : adj[v]) {
        const int want = potential[v] * sign;
        if (potential[w] == 0) {
          potential[w] = want;
          stack.push_back(w);
        } else if (potential[w] != want) {
          ok = false;
        }
      }
    }
    if (ok) ++balanced;
  }
  return static_cast<std::size_t>(n) - balanced;
}

Family frame_circuits(const SignedGraph& s) {
  const std::size_t m = s.graph().edge_count();
  Family dependent;
  for (ElementSet x = 1; x < (ElementSet{1} << m); ++x)
    if (frame_rank(s, x) < cardinality(x)) dependent.push_back(x);
  return oracle::minimal_sets(dependent);
}

SignedGraph all_signs(const Multigraph& g, int sign) {
  std::vector<int> signs;
  for (const Edge& e : g.edges()) signs.push_back(e.kind == EdgeKind::half ? -1 : (e.kind == EdgeKind::loose ? 1 : sign));
  return SignedGraph(g, signs);
}

}  // namespace

TEST(Signed, CorpusNamesAreUnique) {
  const auto corpus = signed_corpus();
  EXPECT_GE(corpus.size(), 10U);
  std::map<std::string, int> seen;
  for (const auto& [name, s] : corpus) EXPECT_EQ(seen[name]++, 0) << name;
}

TEST(Signed, CircuitsMatchFrameRankOracle) {
  for (const auto& [name, s] : signed_corpus()) {
    ASSERT_LE(s.graph().edge_count(), 20U) << name;
    EXPECT_EQ(signed_circuits(s), frame_circuits(s)) << name;
  }
}

TEST(Signed, CircuitAxiomsHoldOnCorpus) {
  for (const auto& [name, s] : signed_corpus()) EXPECT_TRUE(verify_axioms(signed_matroid(s))) << name;
}

TEST(Signed, AllPositiveIsCycleMatroid) {
  for (const Multigraph& g : {complete_graph(4), complete_bipartite(3, 3), triangular_prism()}) {
    const SignedGraph s(g);
    EXPECT_TRUE(is_balanced(s));
    EXPECT_EQ(signed_circuits(s), circles(g));
  }
}

TEST(Signed, AllNegativeBipartiteIsBalanced) {
  const SignedGraph s = all_signs(complete_bipartite(3, 3), -1);
  EXPECT_TRUE(is_balanced(s));
  EXPECT_EQ(signed_circuits(s), circles(s.graph()));
}

TEST(Signed, AllNegativeK4HasHandcuffs) {
  const SignedGraph s = all_signs(complete_graph(4), -1);
  EXPECT_FALSE(is_balanced(s));
  const Family c = signed_circuits(s);
  EXPECT_EQ(c, frame_circuits(s));
  // Triangles are negative, so none of them is a circuit.
  for (ElementSet x : c) EXPECT_NE(cardinality(x), 3U);
  EXPECT_EQ(signed_matroid(s).rank(), 4U);
}

TEST(Signed, CycleSign) {
  Multigraph g = complete_graph(3);
  g.add_half("h", 0);
  SignedGraph s(g);
  s.set_sign("v1v2", -1);
  EXPECT_EQ(cycle_sign(s, g.edge_set({"v1v2", "v2v3", "v1v3"})), -1);
  EXPECT_EQ(cycle_sign(s, g.edge_set({"h"})), -1);
  EXPECT_THROW((void)cycle_sign(s, g.edge_set({"v1v2", "v2v3"})), Error);
}

TEST(Signed, SignConventionsEnforced) {
  Multigraph g;
  g.add_half("h", g.add_vertex("x"));
  g.add_loose("f");
  EXPECT_THROW(SignedGraph(g, {1, 1}), Error);
  EXPECT_THROW(SignedGraph(g, {-1, -1}), Error);
  EXPECT_NO_THROW(SignedGraph(g, {-1, 1}));
  SignedGraph s(g);
  EXPECT_THROW(s.set_sign("h", 1), Error);
}

TEST(Signed, TightAndLooseHandcuffs) {
  const auto tight = catalog_lookup("handcuff-tight");
  const auto loose = catalog_lookup("handcuff-loose");
  ASSERT_TRUE(tight && tight->signed_graph);
  ASSERT_TRUE(loose && loose->signed_graph);
  // Two negative triangles meeting at c.
  const Multigraph& tg = tight->signed_graph->graph();
  const Family tc = signed_circuits(*tight->signed_graph);
  EXPECT_NE(std::find(tc.begin(), tc.end(), tg.edge_set({"cp", "pq", "qc", "cs", "st", "tc"})), tc.end());
  // Two negative loops joined by a path: the whole edge set.
  const Family lc = signed_circuits(*loose->signed_graph);
  ASSERT_EQ(lc.size(), 1U);
  EXPECT_EQ(lc.front(), full_set(loose->signed_graph->graph().edge_count()));
}

TEST(Signed, LooseEdgeIsSingletonCircuit) {
  Multigraph g = complete_graph(3);
  g.add_loose("f");
  const Family c = signed_circuits(SignedGraph(g));
  EXPECT_NE(std::find(c.begin(), c.end(), singleton(g.edge_index("f"))), c.end());
}
