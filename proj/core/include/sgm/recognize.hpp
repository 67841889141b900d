#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sgm/catalog.hpp"
#include "sgm/graph.hpp"
#include "sgm/matroid.hpp"

namespace sgm {

/// Minor certificate: which excluded matroid was found and where.
struct MinorCertificate {
  std::string obstruction;  // "M*(K3,3)", "M*(K5)", "M*(G17)" or "M*(G19)"
  MinorWitness witness;
};

struct GraphicVerdict {
  bool graphic = true;
  std::optional<MinorCertificate> certificate;
};

/// Graphicness of a regular matroid: no M*(K3,3) and no M*(K5) minor.
/// Regularity is the caller's promise; it is not checked.
[[nodiscard]] GraphicVerdict is_graphic(const BinaryMatroid& m, const MatroidLimits& limits = {});

struct CocircuitEntry {
  ElementSet cocircuit = 0;
  GraphicVerdict verdict;
};

struct CocircuitAudit {
  bool all_graphic = true;
  std::vector<CocircuitEntry> ledger;  // cocircuits in lexicographic order
};

/// Checks M \ Y for every cocircuit Y. With stop_at_failure the ledger ends
/// at the first non-graphic deletion.
[[nodiscard]] CocircuitAudit has_graphic_cocircuits(const BinaryMatroid& m,
                                                   bool stop_at_failure = false,
                                                   const MatroidLimits& limits = {});

struct SignedGraphicVerdict {
  bool signed_graphic = true;
  std::optional<MinorCertificate> certificate;
};

/// Excluded-minor test for regular matroids with graphic cocircuits.
/// With check_preconditions, throws PreconditionFailed unless every
/// cocircuit deletion is graphic.
[[nodiscard]] SignedGraphicVerdict regular_signed_graphic_check(const BinaryMatroid& m,
                                                                bool check_preconditions = false,
                                                                const MatroidLimits& limits = {});

/// 3-connected pieces under 1- and 2-sums, ordered by their smallest
/// original element. Basepoints of 2-sum splits are named "~sum0", "~sum1", ...
/// The element bound applies to each connected component.
[[nodiscard]] std::vector<BinaryMatroid> decompose_1_2_sums(const BinaryMatroid& m,
                                                            const MatroidLimits& limits = {});

/// Graph H with M(H) = M, element labels becoming edge labels. M must be
/// graphic and 3-connected; rank 0 and rank 1 inputs give a single vertex with
/// loops or a bundle of parallel links.
[[nodiscard]] Multigraph realize_graph(const BinaryMatroid& m, const MatroidLimits& limits = {});

/// Membership in {K3,n, K3,n+1, K3,n+2, K3,n+3 (n >= 5), K44-, K44}.
/// Graphs that are not simple never match.
[[nodiscard]] std::optional<FamilyName> family_membership(const Multigraph& h);

enum class Decision { signed_graphic, not_signed_graphic };

[[nodiscard]] const char* to_string(Decision d);

struct ComponentReport {
  BinaryMatroid matroid;
  Multigraph graph;  // realizes the dual of `matroid`
  std::optional<FamilyName> match;
};

struct RecognitionOptions {
  bool check_preconditions = false;
  MatroidLimits limits;
};

struct RecognitionReport {
  Decision decision = Decision::signed_graphic;
  std::vector<ComponentReport> components;
  std::optional<std::size_t> flagged;  // first component with a family match
  bool precondition_checked = false;
};

/// Decomposes M, realizes the dual of each piece as a graph and looks for a
/// family member among those graphs. The element bound applies to each
/// connected component.
[[nodiscard]] RecognitionReport recognize_cographic(const BinaryMatroid& m,
                                                    const RecognitionOptions& options = {});

/// Cocircuit audit of M*(G17) and M*(G19); every deletion should be graphic.
struct Lemma31Result {
  CocircuitAudit g17;
  CocircuitAudit g19;
  [[nodiscard]] bool passed() const { return g17.all_graphic && g19.all_graphic; }
};
[[nodiscard]] Lemma31Result verify_lemma31(const MatroidLimits& limits = {});

/// For R15* and R16*: the first cocircuit whose deletion is not graphic.
struct Thm34Result {
  std::optional<CocircuitEntry> r15_dual;
  std::optional<CocircuitEntry> r16_dual;
  [[nodiscard]] bool passed() const { return r15_dual.has_value() && r16_dual.has_value(); }
};
[[nodiscard]] Thm34Result verify_thm34(const MatroidLimits& limits = {});

/// Bond matroids of K3,3 / K5 / G17 / G19, built once.
[[nodiscard]] const BinaryMatroid& bond_k33();
[[nodiscard]] const BinaryMatroid& bond_k5();
[[nodiscard]] const BinaryMatroid& bond_g17();
[[nodiscard]] const BinaryMatroid& bond_g19();

}  // namespace sgm
