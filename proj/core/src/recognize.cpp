#include "sgm/recognize.hpp"

#include <algorithm>
#include <limits>

namespace sgm {

namespace {

void check_bound(std::size_t n, const MatroidLimits& limits, const char* what) {
  if (n > limits.element_bound)
    throw BoundExceeded(std::string(what) + ": " + std::to_string(n) +
                        " elements exceeds bound " + std::to_string(limits.element_bound));
}

std::optional<MinorCertificate> find_obstruction(
    const BinaryMatroid& m, std::initializer_list<std::pair<const char*, const BinaryMatroid*>> targets,
    const MatroidLimits& limits) {
  for (const auto& [name, target] : targets)
    if (auto w = has_minor(m, *target, limits)) return MinorCertificate{name, std::move(*w)};
  return std::nullopt;
}

// A nonzero vector spanning span(X) ∩ span(Y) when (X, Y) is an exact
// 2-separation of a connected matroid.
std::uint64_t separator_vector(const BinaryMatroid& m, ElementSet x, ElementSet y) {
  std::vector<std::uint64_t> basis_x;
  std::vector<std::uint64_t> pivots;  // reduced vectors, each with its tag
  std::vector<std::uint64_t> tags;
  auto reduce = [&](std::uint64_t v, std::uint64_t tag) {
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      const std::uint64_t top = std::uint64_t{1} << (63 - std::countl_zero(pivots[i]));
      if (v & top) {
        v ^= pivots[i];
        tag ^= tags[i];
      }
    }
    return std::pair{v, tag};
  };
  auto add = [&](std::uint64_t v, std::uint64_t tag) {
    auto [r, t] = reduce(v, tag);
    if (r == 0) return std::optional<std::uint64_t>{t};
    // Keep pivots with distinct leading bits, eliminating the new one from
    // the existing rows so reduction stays a single pass.
    const std::uint64_t top = std::uint64_t{1} << (63 - std::countl_zero(r));
    for (std::size_t i = 0; i < pivots.size(); ++i)
      if (pivots[i] & top) {
        pivots[i] ^= r;
        tags[i] ^= t;
      }
    pivots.push_back(r);
    tags.push_back(t);
    return std::optional<std::uint64_t>{};
  };
  for (std::size_t i : members(x)) {
    if (add(m.column(i), std::uint64_t{1} << basis_x.size()))
      continue;  // dependent on earlier X columns
    basis_x.push_back(m.column(i));
  }
  if (basis_x.size() > 32) throw BoundExceeded("2-separation side has rank above 32");
  std::size_t next_tag = 32;
  for (std::size_t i : members(y)) {
    if (auto dep = add(m.column(i), std::uint64_t{1} << next_tag)) {
      std::uint64_t w = 0;
      for (std::size_t b = 0; b < basis_x.size(); ++b)
        if ((*dep >> b) & 1U) w ^= basis_x[b];
      if (w != 0) return w;
      continue;
    }
    if (++next_tag == 64) break;
  }
  throw Error("2-separation without a shared vector");
}

class Decomposer {
 public:
  explicit Decomposer(const MatroidLimits& limits) : limits_(limits) {}

  void split(const BinaryMatroid& m, std::vector<BinaryMatroid>& out) {
    const std::vector<ElementSet> comps = components(m);
    if (comps.size() > 1) {
      for (ElementSet c : comps) split(restrict_to(m, c), out);
      return;
    }
    const std::optional<Separation> sep = first_two_separation(m);
    if (!sep) {
      out.push_back(m);
      return;
    }
    const std::uint64_t w = separator_vector(m, sep->side_x, sep->side_y);
    const std::string base = "~sum" + std::to_string(counter_++);
    split(side(m, sep->side_x, w, base), out);
    split(side(m, sep->side_y, w, base), out);
  }

 private:
  std::optional<Separation> first_two_separation(const BinaryMatroid& m) const {
    if (m.size() < 4) return std::nullopt;
    check_bound(m.size(), limits_, "decompose_1_2_sums");
    const ElementSet ground = m.ground();
    const ElementSet rest = ground & ~ElementSet{1};
    for (ElementSet sub = 0;; sub = (sub - rest) & rest) {
      const ElementSet x = sub | 1U;
      const ElementSet y = ground & ~x;
      if (cardinality(x) >= 2 && cardinality(y) >= 2 &&
          m.rank_of(x) + m.rank_of(y) <= m.rank() + 1)
        return Separation{x, y, 2};
      if (sub == rest) break;
    }
    return std::nullopt;
  }

  static BinaryMatroid side(const BinaryMatroid& m, ElementSet s, std::uint64_t w,
                            const std::string& base) {
    std::vector<std::string> labels;
    std::vector<std::uint64_t> cols;
    for (std::size_t i : members(s)) {
      labels.push_back(m.label(i));
      cols.push_back(m.column(i));
    }
    labels.push_back(base);
    cols.push_back(w);
    return BinaryMatroid::from_columns(std::move(labels), cols, m.rank());
  }

  MatroidLimits limits_;
  std::size_t counter_ = 0;
};

int other_star(const std::vector<std::vector<int>>& stars_of, std::size_t e, int skip) {
  for (int s : stars_of[e])
    if (s != skip) return s;
  return -1;
}

}  // namespace

const BinaryMatroid& bond_k33() {
  static const BinaryMatroid m = bond_matroid(complete_bipartite(3, 3));
  return m;
}
const BinaryMatroid& bond_k5() {
  static const BinaryMatroid m = bond_matroid(complete_graph(5));
  return m;
}
const BinaryMatroid& bond_g17() {
  static const BinaryMatroid m = bond_matroid(g17());
  return m;
}
const BinaryMatroid& bond_g19() {
  static const BinaryMatroid m = bond_matroid(g19());
  return m;
}

GraphicVerdict is_graphic(const BinaryMatroid& m, const MatroidLimits& limits) {
  check_bound(m.size(), limits, "is_graphic");
  GraphicVerdict v;
  v.certificate = find_obstruction(m, {{"M*(K3,3)", &bond_k33()}, {"M*(K5)", &bond_k5()}}, limits);
  v.graphic = !v.certificate;
  return v;
}

CocircuitAudit has_graphic_cocircuits(const BinaryMatroid& m, bool stop_at_failure,
                                      const MatroidLimits& limits) {
  check_bound(m.size(), limits, "has_graphic_cocircuits");
  CocircuitAudit audit;
  for (ElementSet y : cocircuits(m, limits)) {
    CocircuitEntry entry{y, is_graphic(delete_set(m, y), limits)};
    const bool ok = entry.verdict.graphic;
    audit.ledger.push_back(std::move(entry));
    if (!ok) {
      audit.all_graphic = false;
      if (stop_at_failure) break;
    }
  }
  return audit;
}

SignedGraphicVerdict regular_signed_graphic_check(const BinaryMatroid& m, bool check_preconditions,
                                                  const MatroidLimits& limits) {
  check_bound(m.size(), limits, "regular_signed_graphic_check");
  if (check_preconditions && !has_graphic_cocircuits(m, true, limits).all_graphic)
    throw PreconditionFailed("matroid has a non-graphic cocircuit");
  SignedGraphicVerdict v;
  v.certificate = find_obstruction(m, {{"M*(G17)", &bond_g17()}, {"M*(G19)", &bond_g19()}}, limits);
  v.signed_graphic = !v.certificate;
  return v;
}

std::vector<BinaryMatroid> decompose_1_2_sums(const BinaryMatroid& m, const MatroidLimits& limits) {
  std::vector<BinaryMatroid> pieces;
  Decomposer(limits).split(m, pieces);

  auto key = [&](const BinaryMatroid& piece) {
    std::size_t least = std::numeric_limits<std::size_t>::max();
    for (const auto& l : piece.labels()) {
      const auto& all = m.labels();
      const auto it = std::find(all.begin(), all.end(), l);
      if (it != all.end()) least = std::min(least, static_cast<std::size_t>(it - all.begin()));
    }
    return std::pair{least, piece.labels()};
  };
  std::stable_sort(pieces.begin(), pieces.end(),
                   [&](const BinaryMatroid& a, const BinaryMatroid& b) { return key(a) < key(b); });
  return pieces;
}

Multigraph realize_graph(const BinaryMatroid& m, const MatroidLimits& limits) {
  check_bound(m.size(), limits, "realize_graph");
  Multigraph g;
  if (m.rank() <= 1) {
    const int a = g.add_vertex("v1");
    const int b = m.rank() == 1 ? g.add_vertex("v2") : a;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m.column(i) == 0)
        g.add_loop(m.label(i), a);
      else
        g.add_link(m.label(i), a, b);
    }
    return g;
  }
  if (!is_three_connected(m, limits)) throw PreconditionFailed("realize_graph: matroid is not 3-connected");

  // In a 3-connected graph the vertex stars are exactly the bonds whose
  // deletion leaves the rest connected.
  std::vector<ElementSet> stars;
  for (ElementSet c : cocircuits(m, limits)) {
    const BinaryMatroid rest = delete_set(m, c);
    if (rest.size() == 0 || components(rest).size() == 1) stars.push_back(c);
  }
  const std::size_t n = m.size();
  std::vector<std::vector<int>> stars_of(n);
  for (std::size_t s = 0; s < stars.size(); ++s)
    for (std::size_t e : members(stars[s])) stars_of[e].push_back(static_cast<int>(s));
  const bool shaped = stars.size() == m.rank() + 1 &&
                      std::all_of(stars_of.begin(), stars_of.end(),
                                  [](const std::vector<int>& v) { return v.size() == 2; });
  if (!shaped) throw PreconditionFailed("realize_graph: matroid is not graphic");

  for (std::size_t s = 0; s < stars.size(); ++s) g.add_vertex("v" + std::to_string(s + 1));
  for (std::size_t e = 0; e < n; ++e) {
    const int u = stars_of[e][0];
    g.add_link(m.label(e), u, other_star(stars_of, e, u));
  }
  if (!same_circuits(cycle_matroid(g), m)) throw PreconditionFailed("realize_graph: matroid is not graphic");
  return g;
}

std::optional<FamilyName> family_membership(const Multigraph& h) {
  if (!h.is_simple()) return std::nullopt;
  const std::size_t nv = h.vertex_count();
  const std::size_t ne = h.edge_count();
  if (nv == 8 && ne == 15 && graph_iso(h, k44_minus_e())) return FamilyName{FamilyTag::K44minus, 4};
  if (nv == 8 && ne == 16 && graph_iso(h, complete_bipartite(4, 4))) return FamilyName{FamilyTag::K44, 4};
  if (nv < 8) return std::nullopt;

  const std::size_t n = nv - 3;
  for (std::size_t v = 0; v < nv; ++v) {
    if (h.degree(static_cast<int>(v)) != 3) continue;
    std::vector<int> side_a = h.neighbors(static_cast<int>(v));
    if (side_a.size() != 3) continue;
    std::sort(side_a.begin(), side_a.end());
    bool fits = true;
    for (std::size_t w = 0; w < nv && fits; ++w) {
      if (std::binary_search(side_a.begin(), side_a.end(), static_cast<int>(w))) continue;
      std::vector<int> nb = h.neighbors(static_cast<int>(w));
      std::sort(nb.begin(), nb.end());
      fits = h.degree(static_cast<int>(w)) == 3 && nb == side_a;
    }
    if (!fits) return std::nullopt;
    const std::size_t extra = ne - 3 * n;
    if (extra > 3) return std::nullopt;
    return FamilyName{static_cast<FamilyTag>(static_cast<int>(FamilyTag::K3n) + static_cast<int>(extra)),
                      static_cast<int>(n)};
  }
  return std::nullopt;
}

const char* to_string(Decision d) {
  return d == Decision::signed_graphic ? "signed-graphic" : "not-signed-graphic";
}

RecognitionReport recognize_cographic(const BinaryMatroid& m, const RecognitionOptions& options) {
  // Every exhaustive step runs on one connected component at a time, so the
  // element bound applies per component.
  std::vector<BinaryMatroid> parts;
  for (ElementSet c : components(m)) {
    check_bound(cardinality(c), options.limits, "recognize_cographic");
    parts.push_back(restrict_to(m, c));
  }
  RecognitionReport report;
  if (options.check_preconditions) {
    for (const BinaryMatroid& part : parts) {
      if (!is_graphic(dual(part), options.limits).graphic)
        throw PreconditionFailed("input is not cographic");
      if (!has_graphic_cocircuits(part, true, options.limits).all_graphic)
        throw PreconditionFailed("input has a non-graphic cocircuit");
    }
    // Deleting a cocircuit of one component leaves the others whole.
    for (std::size_t j = 0; j < parts.size(); ++j) {
      bool other_has_cocircuit = false;
      for (std::size_t i = 0; i < parts.size(); ++i)
        if (i != j && parts[i].rank() > 0) other_has_cocircuit = true;
      if (other_has_cocircuit && !is_graphic(parts[j], options.limits).graphic)
        throw PreconditionFailed("input has a non-graphic cocircuit");
    }
    report.precondition_checked = true;
  }
  for (BinaryMatroid& piece : decompose_1_2_sums(m, options.limits)) {
    ComponentReport c;
    try {
      c.graph = realize_graph(dual(piece), options.limits);
    } catch (const PreconditionFailed&) {
      throw PreconditionFailed("a 3-connected piece has a non-graphic dual; input is not cographic");
    }
    c.match = family_membership(c.graph);
    c.matroid = std::move(piece);
    if (c.match && !report.flagged) report.flagged = report.components.size();
    report.components.push_back(std::move(c));
  }
  report.decision = report.flagged ? Decision::not_signed_graphic : Decision::signed_graphic;
  return report;
}

Lemma31Result verify_lemma31(const MatroidLimits& limits) {
  return {has_graphic_cocircuits(bond_g17(), false, limits),
          has_graphic_cocircuits(bond_g19(), false, limits)};
}

Thm34Result verify_thm34(const MatroidLimits& limits) {
  auto first_failure = [&](const BinaryMatroid& m) -> std::optional<CocircuitEntry> {
    CocircuitAudit audit = has_graphic_cocircuits(m, true, limits);
    if (audit.all_graphic) return std::nullopt;
    return audit.ledger.back();
  };
  return {first_failure(dual(r15())), first_failure(dual(r16()))};
}

}  // namespace sgm
