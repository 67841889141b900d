#pragma once

#include <vector>

#include "sgm/graph.hpp"
#include "sgm/matroid.hpp"

namespace sgm {

/// Graph plus a sign per edge. Half edges are always negative and loose
/// edges always positive; the constructor enforces both.
class SignedGraph {
 public:
  SignedGraph() = default;
  /// Every edge positive except half edges.
  explicit SignedGraph(Multigraph g);
  /// signs[i] is +1 or -1 for edge i.
  SignedGraph(Multigraph g, std::vector<int> signs);

  [[nodiscard]] const Multigraph& graph() const noexcept { return graph_; }
  [[nodiscard]] int sign(std::size_t edge) const { return signs_.at(edge); }
  [[nodiscard]] const std::vector<int>& signs() const noexcept { return signs_; }
  void set_sign(const std::string& label, int sign);

 private:
  void validate() const;

  Multigraph graph_;
  std::vector<int> signs_;
};

/// Sign of a cycle: a circle of the underlying graph, or a single half edge.
[[nodiscard]] int cycle_sign(const SignedGraph& s, ElementSet x);

[[nodiscard]] bool is_balanced(const SignedGraph& s);

/// Positive cycles, tight handcuffs and loose handcuffs; sorted by member list.
[[nodiscard]] Family signed_circuits(const SignedGraph& s, const GraphLimits& limits = {});

/// Signed-graphic matroid. Throws Error if the circuit family fails the
/// circuit axioms.
[[nodiscard]] CircuitMatroid signed_matroid(const SignedGraph& s, const GraphLimits& limits = {});

}  // namespace sgm
