#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sgm/graph.hpp"
#include "sgm/matroid.hpp"
#include "sgm/signed_graph.hpp"

namespace sgm {

enum class FamilyTag { K3n, K3nPlus1, K3nPlus2, K3nPlus3, K44minus, K44 };

/// A member of the obstruction families: K_{3,n} with 0-3 extra edges inside
/// its 3-vertex side A (n >= 5), K_{4,4} minus an edge, or K_{4,4}.
struct FamilyName {
  FamilyTag tag = FamilyTag::K3n;
  int n = 0;  // size of the degree-3 side B; 4 for the K_{4,4} variants

  friend bool operator==(const FamilyName&, const FamilyName&) = default;
};

[[nodiscard]] std::string to_string(FamilyTag tag);
[[nodiscard]] std::string to_string(const FamilyName& f);
[[nodiscard]] std::optional<FamilyTag> parse_family_tag(const std::string& s);

// Vertex naming: complete graphs use v1..vn, bipartite graphs a1..am / b1..bn,
// wheels a hub "h" with rim r1..rn. Edges are named after their ends
// ("a1b2", "v1v3", "h-r2", "r1r2"); extra edges of k3n_plus are "a1a2",
// "a1a3", "a2a3" in that order, so a1 is the centre of the path.

[[nodiscard]] Multigraph complete_graph(int n);
[[nodiscard]] Multigraph complete_bipartite(int m, int n);
/// Hub joined to every vertex of an n-cycle (n >= 3).
[[nodiscard]] Multigraph wheel(int n);
/// K_{4,4} without the edge a1b1.
[[nodiscard]] Multigraph k44_minus_e();
/// K_{3,n} plus i edges on side A: one edge, a path, or a triangle.
[[nodiscard]] Multigraph k3n_plus(int n, int i);
[[nodiscard]] Multigraph family_graph(const FamilyName& f);

[[nodiscard]] Multigraph triangular_prism();
[[nodiscard]] Multigraph petersen();
[[nodiscard]] Multigraph cube();

/// G17 and G19 written out as explicit edge lists (G17 = K_{3,5},
/// G19 = K_{4,4} minus an edge) with their own vertex names.
[[nodiscard]] Multigraph g17();
[[nodiscard]] Multigraph g19();

/// The two regular non-cographic excluded minors, columns e1..e15 / e1..e16.
[[nodiscard]] BinaryMatroid r15();
[[nodiscard]] BinaryMatroid r16();

/// Printed rows of the R15 / R16 matrices, left to right.
[[nodiscard]] const std::vector<std::string>& r15_rows();
[[nodiscard]] const std::vector<std::string>& r16_rows();

/// Bond matroid M*(G).
[[nodiscard]] BinaryMatroid bond_matroid(const Multigraph& g);

struct CatalogEntry {
  std::string name;
  std::optional<Multigraph> graph;
  std::optional<BinaryMatroid> matroid;
  std::optional<SignedGraph> signed_graph;
};

/// Looks up names such as "K5", "K3,5", "K44-", "K44", "W5", "K3,5+2",
/// "G17", "G19", "R15", "R16", "prism", "petersen", "cube", and the signed
/// examples "sK4-neg", "handcuff-tight", "handcuff-loose". Returns nullopt
/// for unknown names.
[[nodiscard]] std::optional<CatalogEntry> catalog_lookup(const std::string& name);
[[nodiscard]] std::vector<std::string> catalog_names();

/// Signed graphs used as axiom-check corpus.
[[nodiscard]] std::vector<std::pair<std::string, SignedGraph>> signed_corpus();

}  // namespace sgm
