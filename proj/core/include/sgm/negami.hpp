#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "sgm/catalog.hpp"
#include "sgm/graph.hpp"

namespace sgm {

enum class Operation { O1, O2 };

[[nodiscard]] const char* to_string(Operation op);

/// O1 joins `u` and `v`. O2 splits `u` into `u` (keeping `part1`) and the new
/// vertex `v` (taking `part2`), joined by the new edge `edge`.
struct ExtensionStep {
  Operation kind = Operation::O1;
  std::string u;
  std::string v;
  std::string edge;
  std::vector<std::string> part1;
  std::vector<std::string> part2;
};

struct Extension {
  Multigraph graph;
  ExtensionStep step;
};

/// One extension per non-adjacent vertex pair. G must be simple.
[[nodiscard]] std::vector<Extension> o1_extensions(const Multigraph& g);

/// Splits of every vertex of degree >= 4 into two adjacent vertices that
/// partition its neighbours, each side keeping at least two of them. The
/// first neighbour always stays with the original vertex, so each unordered
/// partition appears once. G must be simple.
[[nodiscard]] std::vector<Extension> o2_splits(const Multigraph& g);

/// Hub adjacent to every vertex of a cycle through all other vertices.
[[nodiscard]] bool is_wheel(const Multigraph& g);

struct ClosureEntry {
  Multigraph graph;
  std::optional<std::size_t> parent;  // index into the closure
  std::optional<ExtensionStep> step;   // how `graph` came from its parent
};

struct ClosureLimits {
  std::size_t max_graphs = 200000;
};

/// Breadth-first closure of H under O1 and O2 up to `max_edges` edges, one
/// representative per isomorphism class. Every emitted graph is checked to be
/// 3-connected and to have an H-minor; a failure throws Error.
[[nodiscard]] std::vector<ClosureEntry> negami_closure(const Multigraph& h, std::size_t max_edges,
                                                       const ClosureLimits& limits = {});

/// Steps from the seed to closure[i].
[[nodiscard]] std::vector<ExtensionStep> provenance(const std::vector<ClosureEntry>& closure,
                                                    std::size_t i);

/// For every circle X, G/X has neither a K5 nor a K3,3 minor.
[[nodiscard]] bool condition_iii(const Multigraph& g, const GraphLimits& limits = {});

struct FamilyConditions {
  bool three_connected = false;
  bool g17_or_g19_minor = false;
  bool contraction_condition = false;
  [[nodiscard]] bool all() const { return three_connected && g17_or_g19_minor && contraction_condition; }
};

[[nodiscard]] FamilyConditions family_conditions(const Multigraph& g, const GraphLimits& limits = {});

struct FamilyCheck {
  std::string name;
  Multigraph graph;
  FamilyConditions conditions;
  std::optional<FamilyName> member;
};

struct FamilyVerification {
  std::vector<FamilyCheck> members;      // every listed family member, n <= n_max
  std::size_t l_closure_size = 0;        // closure of K3,5
  std::size_t m_closure_size = 0;        // closure of K44-
  std::size_t satisfying = 0;            // closure graphs meeting all conditions
  std::vector<FamilyCheck> counterexamples;
  [[nodiscard]] bool passed() const;
};

/// Family members up to n_max satisfy all conditions, and inside both
/// closures a graph satisfies them exactly when it is a family member.
[[nodiscard]] FamilyVerification verify_family_theorems(int n_max, std::size_t edge_budget,
                                                        const ClosureLimits& limits = {});

}  // namespace sgm
