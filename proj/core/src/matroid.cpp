#include "sgm/matroid.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "internal.hpp"

namespace sgm {

namespace detail {

Family circuits_of_columns(std::span<const std::uint64_t> cols) {
  // Fundamental circuits span the cycle space; its minimal supports are the
  // circuits, and in a binary matroid a cycle X is a circuit exactly when
  // rank(X) = |X| - 1.
  struct Slot {
    std::uint64_t vec = 0;
    ElementSet combo = 0;
  };
  std::array<Slot, 64> slots{};
  std::vector<ElementSet> fundamental;
  for (std::size_t j = 0; j < cols.size(); ++j) {
    std::uint64_t v = cols[j];
    ElementSet combo = singleton(j);
    bool placed = false;
    while (v != 0) {
      const int top = 63 - std::countl_zero(v);
      if (slots[top].vec == 0) {
        slots[top] = {v, combo};
        placed = true;
        break;
      }
      v ^= slots[top].vec;
      combo ^= slots[top].combo;
    }
    if (!placed) fundamental.push_back(combo);
  }
  Family out;
  const std::size_t c = fundamental.size();
  if (c >= 63) throw BoundExceeded("cycle space too large to enumerate");
  ElementSet x = 0;
  for (std::uint64_t i = 1; i < (std::uint64_t{1} << c); ++i) {
    x ^= fundamental[static_cast<std::size_t>(std::countr_zero(i))];
    if (rank_of_columns(cols, x) + 1 == cardinality(x)) out.push_back(x);
  }
  std::sort(out.begin(), out.end(), LexLess{});
  return out;
}

void quotient_by(std::vector<std::uint64_t>& cols, std::uint64_t v) {
  if (v == 0) return;
  const int p = std::countr_zero(v);
  const std::uint64_t low = (std::uint64_t{1} << p) - 1;
  for (std::uint64_t& c : cols) {
    if ((c >> p) & 1U) c ^= v;
    c = (c & low) | ((c >> (p + 1)) << p);
  }
}

}  // namespace detail

namespace {

void check_bound(std::size_t n, const MatroidLimits& limits, const char* what) {
  if (n > limits.element_bound)
    throw BoundExceeded(std::string(what) + ": " + std::to_string(n) +
                        " elements exceeds bound " + std::to_string(limits.element_bound));
}

void check_unique(const std::vector<std::string>& labels) {
  std::unordered_set<std::string> seen;
  for (const auto& l : labels)
    if (!seen.insert(l).second) throw Error("duplicate element label '" + l + "'");
}

}  // namespace

BinaryMatroid::BinaryMatroid(std::vector<std::string> labels, const Gf2Matrix& rep)
    : labels_(std::move(labels)) {
  if (labels_.size() != rep.cols())
    throw Error("label count " + std::to_string(labels_.size()) + " does not match " +
                std::to_string(rep.cols()) + " columns");
  if (labels_.size() > kMaxGroundSet)
    throw BoundExceeded("binary matroids are limited to 64 elements");
  check_unique(labels_);
  const RrefResult reduced = rref(rep);
  rank_ = reduced.pivots.size();
  columns_.assign(labels_.size(), 0);
  for (std::size_t r = 0; r < rank_; ++r)
    for (std::size_t c = 0; c < rep.cols(); ++c)
      if (reduced.matrix.get(r, c)) columns_[c] |= std::uint64_t{1} << r;
}

BinaryMatroid BinaryMatroid::from_columns(std::vector<std::string> labels,
                                          std::span<const std::uint64_t> columns,
                                          std::size_t rows) {
  if (rows > 64) throw BoundExceeded("column vectors are limited to 64 coordinates");
  Gf2Matrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c)
    for (std::size_t r = 0; r < rows; ++r)
      if ((columns[c] >> r) & 1U) m.set(r, c, true);
  return BinaryMatroid(std::move(labels), m);
}

std::size_t BinaryMatroid::index_of(const std::string& label) const {
  const auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) throw UnknownLabel(label);
  return static_cast<std::size_t>(it - labels_.begin());
}

ElementSet BinaryMatroid::set_of(std::span<const std::string> labels) const {
  ElementSet s = 0;
  for (const auto& l : labels) s |= singleton(index_of(l));
  return s;
}

std::vector<std::string> BinaryMatroid::labels_of(ElementSet s) const {
  std::vector<std::string> out;
  for (std::size_t i : members(s)) out.push_back(labels_.at(i));
  return out;
}

std::size_t BinaryMatroid::rank_of(ElementSet s) const {
  return detail::rank_of_columns(columns_, s & ground());
}

Gf2Matrix BinaryMatroid::representation() const {
  Gf2Matrix m(rank_, labels_.size());
  for (std::size_t c = 0; c < columns_.size(); ++c)
    for (std::size_t r = 0; r < rank_; ++r)
      if ((columns_[c] >> r) & 1U) m.set(r, c, true);
  return m;
}

bool CircuitMatroid::is_independent(ElementSet s) const {
  return std::none_of(circuits.begin(), circuits.end(),
                      [s](ElementSet c) { return is_subset(c, s); });
}

std::size_t CircuitMatroid::rank_of(ElementSet s) const {
  ElementSet indep = 0;
  for (std::size_t i : members(s & ground()))
    if (is_independent(indep | singleton(i))) indep |= singleton(i);
  return cardinality(indep);
}

std::size_t rank_subset(const BinaryMatroid& m, std::span<const std::string> labels) {
  return m.rank_of(m.set_of(labels));
}

Family circuits(const BinaryMatroid& m, const MatroidLimits& limits) {
  check_bound(m.size(), limits, "circuits");
  return detail::circuits_of_columns(m.columns());
}

Family circuits(const CircuitMatroid& m, const MatroidLimits& limits) {
  check_bound(m.size(), limits, "circuits");
  return m.circuits;
}

Family cocircuits(const BinaryMatroid& m, const MatroidLimits& limits) {
  return circuits(dual(m), limits);
}

BinaryMatroid dual(const BinaryMatroid& m) {
  // Stored columns are in reduced row echelon form, so pivot columns are unit
  // vectors and the rest hold D of [I | D]. The dual is [D^T | I].
  const std::size_t n = m.size();
  const std::size_t r = m.rank();
  std::vector<std::size_t> pivot_of_row(r, n);
  std::vector<bool> is_pivot(n, false);
  for (std::size_t c = 0; c < n; ++c) {
    const std::uint64_t v = m.column(c);
    if (std::has_single_bit(v)) {
      const auto row = static_cast<std::size_t>(std::countr_zero(v));
      if (pivot_of_row[row] == n) {
        pivot_of_row[row] = c;
        is_pivot[c] = true;
      }
    }
  }
  std::vector<std::size_t> non_pivots;
  for (std::size_t c = 0; c < n; ++c)
    if (!is_pivot[c]) non_pivots.push_back(c);

  std::vector<std::uint64_t> cols(n, 0);
  for (std::size_t k = 0; k < non_pivots.size(); ++k) {
    cols[non_pivots[k]] = std::uint64_t{1} << k;
    const std::uint64_t d = m.column(non_pivots[k]);
    for (std::size_t row = 0; row < r; ++row)
      if ((d >> row) & 1U) cols[pivot_of_row[row]] |= std::uint64_t{1} << k;
  }
  return BinaryMatroid::from_columns(m.labels(), cols, non_pivots.size());
}

BinaryMatroid restrict_to(const BinaryMatroid& m, ElementSet keep) {
  std::vector<std::string> labels;
  std::vector<std::uint64_t> cols;
  for (std::size_t i : members(keep & m.ground())) {
    labels.push_back(m.label(i));
    cols.push_back(m.column(i));
  }
  return BinaryMatroid::from_columns(std::move(labels), cols, m.rank());
}

BinaryMatroid delete_set(const BinaryMatroid& m, ElementSet t) {
  return restrict_to(m, m.ground() & ~t);
}

BinaryMatroid contract_set(const BinaryMatroid& m, ElementSet t) {
  std::vector<std::uint64_t> cols = m.columns();
  std::size_t rows = m.rank();
  for (std::size_t i : members(t & m.ground())) {
    const std::uint64_t v = cols[i];
    if (v == 0) continue;
    detail::quotient_by(cols, v);
    --rows;
  }
  std::vector<std::string> labels;
  std::vector<std::uint64_t> kept;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (contains(t, i)) continue;
    labels.push_back(m.label(i));
    kept.push_back(cols[i]);
  }
  return BinaryMatroid::from_columns(std::move(labels), kept, rows);
}

BinaryMatroid delete_labels(const BinaryMatroid& m, std::span<const std::string> t) {
  return delete_set(m, m.set_of(t));
}

BinaryMatroid contract_labels(const BinaryMatroid& m, std::span<const std::string> t) {
  return contract_set(m, m.set_of(t));
}

namespace {

CircuitMatroid reindexed(const CircuitMatroid& m, ElementSet keep, Family fam) {
  CircuitMatroid out;
  for (std::size_t i : members(keep)) out.labels.push_back(m.labels.at(i));
  for (ElementSet& c : fam) c = detail::compress(c, keep);
  std::sort(fam.begin(), fam.end(), LexLess{});
  fam.erase(std::unique(fam.begin(), fam.end()), fam.end());
  out.circuits = std::move(fam);
  return out;
}

}  // namespace

CircuitMatroid delete_set(const CircuitMatroid& m, ElementSet t) {
  Family fam;
  for (ElementSet c : m.circuits)
    if ((c & t) == 0) fam.push_back(c);
  return reindexed(m, m.ground() & ~t, std::move(fam));
}

CircuitMatroid contract_set(const CircuitMatroid& m, ElementSet t) {
  Family candidates;
  for (ElementSet c : m.circuits)
    if ((c & ~t) != 0) candidates.push_back(c & ~t);
  std::sort(candidates.begin(), candidates.end(),
            [](ElementSet a, ElementSet b) { return cardinality(a) < cardinality(b); });
  Family minimal;
  for (ElementSet c : candidates) {
    const bool dominated = std::any_of(minimal.begin(), minimal.end(),
                                       [c](ElementSet d) { return is_subset(d, c); });
    if (!dominated) minimal.push_back(c);
  }
  return reindexed(m, m.ground() & ~t, std::move(minimal));
}

CircuitMatroid to_circuit_matroid(const BinaryMatroid& m, const MatroidLimits& limits) {
  return {m.labels(), circuits(m, limits)};
}

BinaryMatroid apply_witness(const BinaryMatroid& m, const MinorWitness& w) {
  const BinaryMatroid contracted = contract_set(m, w.contracted);
  const ElementSet remaining = m.ground() & ~w.contracted;
  return delete_set(contracted, detail::compress(w.deleted, remaining));
}

std::vector<ElementSet> components(const BinaryMatroid& m) {
  // Components of a binary matroid are the components of the bipartite graph
  // linking each non-basis element to the basis elements of its fundamental
  // circuit.
  const std::size_t n = m.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<std::size_t> pivot_of_row(m.rank(), n);
  for (std::size_t c = 0; c < n; ++c) {
    const std::uint64_t v = m.column(c);
    if (std::has_single_bit(v)) {
      const auto row = static_cast<std::size_t>(std::countr_zero(v));
      if (pivot_of_row[row] == n) pivot_of_row[row] = c;
    }
  }
  for (std::size_t c = 0; c < n; ++c) {
    const std::uint64_t v = m.column(c);
    for (std::size_t row = 0; row < m.rank(); ++row)
      if ((v >> row) & 1U) parent[find(c)] = find(pivot_of_row[row]);
  }
  std::vector<ElementSet> out;
  std::unordered_map<std::size_t, std::size_t> slot;
  for (std::size_t c = 0; c < n; ++c) {
    const std::size_t root = find(c);
    auto [it, fresh] = slot.try_emplace(root, out.size());
    if (fresh) out.push_back(0);
    out[it->second] |= singleton(c);
  }
  return out;
}

namespace {

// Calls visit(X, lambda) for each bipartition with element 0 in X.
template <typename Visit>
void for_each_bipartition(const BinaryMatroid& m, Visit&& visit) {
  const std::size_t n = m.size();
  if (n < 2) return;
  const ElementSet ground = m.ground();
  const std::size_t total = m.rank();
  const ElementSet rest = ground & ~ElementSet{1};
  // X = {0} ∪ sub for every proper sub of the other elements.
  for (ElementSet sub = 0;; sub = (sub - rest) & rest) {
    const ElementSet x = sub | 1U;
    if (x != ground) {
      const ElementSet y = ground & ~x;
      const std::size_t lambda = m.rank_of(x) + m.rank_of(y) - total;
      if (!visit(x, y, lambda)) return;
    }
    if (sub == rest) break;
  }
}

}  // namespace

std::optional<std::size_t> connectivity(const BinaryMatroid& m, const MatroidLimits& limits) {
  check_bound(m.size(), limits, "connectivity");
  std::optional<std::size_t> best;
  for_each_bipartition(m, [&](ElementSet x, ElementSet y, std::size_t lambda) {
    const std::size_t k = lambda + 1;
    if (std::min(cardinality(x), cardinality(y)) >= k && (!best || k < *best)) best = k;
    return !(best && *best == 1);
  });
  return best;
}

std::vector<Separation> k_separations(const BinaryMatroid& m, std::size_t k,
                                      const MatroidLimits& limits) {
  check_bound(m.size(), limits, "k_separations");
  std::vector<Separation> out;
  if (k == 0) return out;
  for_each_bipartition(m, [&](ElementSet x, ElementSet y, std::size_t lambda) {
    if (std::min(cardinality(x), cardinality(y)) >= k && lambda <= k - 1)
      out.push_back({x, y, k});
    return true;
  });
  std::sort(out.begin(), out.end(),
            [](const Separation& a, const Separation& b) { return lex_less(a.side_x, b.side_x); });
  return out;
}

bool is_three_connected(const BinaryMatroid& m, const MatroidLimits& limits) {
  const auto k = connectivity(m, limits);
  return !k || *k >= 3;
}

bool verify_axioms(const CircuitMatroid& m) {
  const Family& f = m.circuits;
  const ElementSet ground = m.ground();
  for (ElementSet c : f)
    if (c == 0 || !is_subset(c, ground)) return false;
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = 0; j < f.size(); ++j)
      if (i != j && is_subset(f[i], f[j])) return false;
  for (std::size_t i = 0; i < f.size(); ++i) {
    for (std::size_t j = i + 1; j < f.size(); ++j) {
      const ElementSet common = f[i] & f[j];
      if (common == 0) continue;
      const ElementSet uni = f[i] | f[j];
      for (std::size_t e : members(common)) {
        const ElementSet target = uni & ~singleton(e);
        const bool found = std::any_of(f.begin(), f.end(),
                                       [target](ElementSet c) { return is_subset(c, target); });
        if (!found) return false;
      }
    }
  }
  return true;
}

BinaryMatroid direct_sum(const BinaryMatroid& m, const BinaryMatroid& n) {
  if (m.rank() + n.rank() > 64) throw BoundExceeded("direct sum rank exceeds 64");
  std::vector<std::string> labels = m.labels();
  labels.insert(labels.end(), n.labels().begin(), n.labels().end());
  std::vector<std::uint64_t> cols = m.columns();
  for (std::uint64_t c : n.columns()) cols.push_back(c << m.rank());
  return BinaryMatroid::from_columns(std::move(labels), cols, m.rank() + n.rank());
}

namespace {

bool is_loop(const BinaryMatroid& m, std::size_t e) { return m.column(e) == 0; }

bool is_coloop(const BinaryMatroid& m, std::size_t e) {
  return m.rank_of(m.ground() & ~singleton(e)) < m.rank();
}

}  // namespace

BinaryMatroid two_sum(const BinaryMatroid& m, const BinaryMatroid& n, const std::string& p,
                      const std::string& q) {
  const std::size_t ip = m.index_of(p);
  const std::size_t iq = n.index_of(q);
  if (is_loop(m, ip) || is_coloop(m, ip))
    throw PreconditionFailed("basepoint '" + p + "' is a loop or coloop");
  if (is_loop(n, iq) || is_coloop(n, iq))
    throw PreconditionFailed("basepoint '" + q + "' is a loop or coloop");
  const std::size_t rows = m.rank() + n.rank() + 1;
  if (rows > 64) throw BoundExceeded("2-sum rank exceeds 64");
  // Cycles of the 2-sum are cycles of M ⊕ N that use p and q together, with
  // p and q projected away: add the row e_p + e_q and contract both.
  BinaryMatroid joined = direct_sum(m, n);
  std::vector<std::uint64_t> cols = joined.columns();
  const std::uint64_t extra = std::uint64_t{1} << (rows - 1);
  cols[ip] |= extra;
  cols[m.size() + iq] |= extra;
  joined = BinaryMatroid::from_columns(joined.labels(), cols, rows);
  return contract_set(joined, singleton(ip) | singleton(m.size() + iq));
}

bool same_circuits(const BinaryMatroid& a, const BinaryMatroid& b) {
  if (a.size() != b.size() || a.rank() != b.rank()) return false;
  std::vector<std::size_t> to_b(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    const auto& labels = b.labels();
    const auto it = std::find(labels.begin(), labels.end(), a.label(i));
    if (it == labels.end()) return false;
    to_b[i] = static_cast<std::size_t>(it - labels.begin());
  }
  MatroidLimits wide{kMaxGroundSet};
  Family fa = circuits(a, wide);
  Family fb = circuits(b, wide);
  if (fa.size() != fb.size()) return false;
  for (ElementSet& c : fa) {
    ElementSet mapped = 0;
    for (std::size_t i : members(c)) mapped |= singleton(to_b[i]);
    c = mapped;
  }
  std::sort(fa.begin(), fa.end());
  std::sort(fb.begin(), fb.end());
  return fa == fb;
}

}  // namespace sgm
