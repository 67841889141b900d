#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sgm/element_set.hpp"
#include "sgm/error.hpp"
#include "sgm/matroid.hpp"

namespace sgm {

enum class EdgeKind { link, loop, half, loose };

const char* to_string(EdgeKind kind);

struct Edge {
  std::string label;
  EdgeKind kind = EdgeKind::link;
  // Vertex indices; -1 where the kind has fewer endpoints. A loop stores its
  // vertex in both slots.
  int u = -1;
  int v = -1;

  friend bool operator==(const Edge&, const Edge&) = default;
};

inline constexpr std::size_t kDefaultEdgeBound = 40;

struct GraphLimits {
  std::size_t edge_bound = kDefaultEdgeBound;
};

/// Graph with links, loops, half edges and loose edges. Edge labels are
/// unique and survive every operation, so edge sets here line up with element
/// sets of the matroids built from the graph.
class Multigraph {
 public:
  Multigraph() = default;

  int add_vertex(const std::string& name);
  /// Index of `name`, adding the vertex when missing.
  int ensure_vertex(const std::string& name);

  void add_link(const std::string& label, int u, int v);
  void add_loop(const std::string& label, int v);
  void add_half(const std::string& label, int v);
  void add_loose(const std::string& label);
  /// Convenience: link between named vertices, created on demand.
  void add_link(const std::string& label, const std::string& u, const std::string& v);

  [[nodiscard]] std::size_t vertex_count() const noexcept { return vertices_.size(); }
  [[nodiscard]] std::size_t edge_count() const noexcept { return edges_.size(); }
  [[nodiscard]] const std::vector<std::string>& vertices() const noexcept { return vertices_; }
  [[nodiscard]] const std::vector<Edge>& edges() const noexcept { return edges_; }
  [[nodiscard]] const Edge& edge(std::size_t i) const { return edges_.at(i); }
  [[nodiscard]] const std::string& vertex(std::size_t i) const { return vertices_.at(i); }

  [[nodiscard]] std::optional<int> find_vertex(const std::string& name) const;
  [[nodiscard]] int vertex_index(const std::string& name) const;
  [[nodiscard]] std::size_t edge_index(const std::string& label) const;
  [[nodiscard]] bool has_edge_label(const std::string& label) const;
  [[nodiscard]] std::vector<std::string> edge_labels() const;
  [[nodiscard]] ElementSet edge_set(const std::vector<std::string>& labels) const;
  [[nodiscard]] std::vector<std::string> labels_of(ElementSet s) const;

  /// Degree with loops counted twice and half edges once.
  [[nodiscard]] std::size_t degree(int v) const;
  /// Distinct link neighbours.
  [[nodiscard]] std::vector<int> neighbors(int v) const;
  [[nodiscard]] bool adjacent(int u, int v) const;
  [[nodiscard]] std::size_t link_multiplicity(int u, int v) const;

  /// Only links, at most one between any two vertices.
  [[nodiscard]] bool is_simple() const;
  [[nodiscard]] bool is_connected() const;
  /// A label not used by any edge, derived from `stem`.
  [[nodiscard]] std::string fresh_edge_label(const std::string& stem) const;
  [[nodiscard]] std::string fresh_vertex_name(const std::string& stem) const;

  // Low-level editing used by graph operations.
  void remove_edges(ElementSet doomed);
  void remove_vertex_index(int v);
  Edge& mutable_edge(std::size_t i) { return edges_.at(i); }

  friend bool operator==(const Multigraph&, const Multigraph&) = default;

 private:
  void check_label(const std::string& label) const;
  void check_vertex(int v) const;

  std::vector<std::string> vertices_;
  std::vector<Edge> edges_;
};

[[nodiscard]] Multigraph delete_edge(const Multigraph& g, const std::string& label);
[[nodiscard]] Multigraph delete_vertex(const Multigraph& g, const std::string& vertex);

/// Contraction with the link, loop/half-edge and loose-edge rules: a link
/// identifies its ends, a loop or half edge removes its vertex (turning the
/// other links at it into half edges), a loose edge is deleted.
[[nodiscard]] Multigraph contract_edge(const Multigraph& g, const std::string& label);

/// Edge sets of cycles made of links and loops, sorted lexicographically
/// by edge index. Half edges and loose edges are not circles.
[[nodiscard]] std::vector<ElementSet> circles(const Multigraph& g, const GraphLimits& limits = {});
[[nodiscard]] bool is_circle(const Multigraph& g, ElementSet x);

/// Contracts every edge of the circle X in the cycle-matroid sense: the
/// vertices of X are identified and the edges of X disappear.
[[nodiscard]] Multigraph contract_circle(const Multigraph& g, ElementSet x);

/// Least k such that the edge set has a k-separation; nullopt = infinite.
[[nodiscard]] std::optional<std::size_t> tutte_connectivity(const Multigraph& g,
                                                            const GraphLimits& limits = {});
/// Simple graphs on >= 4 vertices: 3-vertex-connectivity, equivalent to Tutte
/// 3-connectivity there. Much cheaper than the exhaustive edge search.
[[nodiscard]] bool is_three_connected_simple(const Multigraph& g);

/// Vertex bijection (indices of H for each vertex of G) preserving every
/// edge kind with multiplicity.
[[nodiscard]] std::optional<std::vector<int>> graph_iso(const Multigraph& g, const Multigraph& h);

/// Whether H is a minor of G, by searching for disjoint connected branch
/// sets with the adjacencies H needs. H must be simple and connected.
[[nodiscard]] bool has_graph_minor(const Multigraph& g, const Multigraph& h,
                                   const GraphLimits& limits = {});

/// Branch sets (vertex index lists of G, one per vertex of H) when H is a minor.
[[nodiscard]] std::optional<std::vector<std::vector<int>>> find_minor_model(
    const Multigraph& g, const Multigraph& h, const GraphLimits& limits = {});

/// Vertex-edge incidence matrix over GF(2); only links are allowed.
[[nodiscard]] BinaryMatroid cycle_matroid(const Multigraph& g);

/// Proper 2-colouring by breadth-first search; vertex index lists.
[[nodiscard]] std::optional<std::pair<std::vector<int>, std::vector<int>>> bipartition(
    const Multigraph& g);

/// Underlying simple graph: loops, half and loose edges dropped, parallel
/// links merged (first label kept).
[[nodiscard]] Multigraph simplify(const Multigraph& g);

}  // namespace sgm
