#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sgm/element_set.hpp"
#include "sgm/error.hpp"
#include "sgm/gf2.hpp"

namespace sgm {

inline constexpr std::size_t kDefaultElementBound = 20;

// Exhaustive matroid routines refuse ground sets larger than `element_bound`.
struct MatroidLimits {
  std::size_t element_bound = kDefaultElementBound;
};

using Family = std::vector<ElementSet>;

/// Vector matroid M[A] over GF(2).
///
/// The representation is stored reduced: rank(M) rows, each column packed into
/// one 64-bit word of basis coordinates. Any matrix handed to the constructor
/// is row-reduced first, so two representations of the same column space give
/// bit-identical columns only up to the choice of basis; compare matroids with
/// is_isomorphic or by circuits, not by columns.
class BinaryMatroid {
 public:
  BinaryMatroid() = default;
  BinaryMatroid(std::vector<std::string> labels, const Gf2Matrix& rep);

  /// Columns already expressed as bit vectors of length `rows` (rows <= 64).
  static BinaryMatroid from_columns(std::vector<std::string> labels,
                                    std::span<const std::uint64_t> columns, std::size_t rows);

  [[nodiscard]] std::size_t size() const noexcept { return labels_.size(); }
  [[nodiscard]] std::size_t rank() const noexcept { return rank_; }
  [[nodiscard]] std::size_t corank() const noexcept { return labels_.size() - rank_; }
  [[nodiscard]] ElementSet ground() const noexcept { return full_set(labels_.size()); }

  [[nodiscard]] const std::vector<std::string>& labels() const noexcept { return labels_; }
  [[nodiscard]] const std::string& label(std::size_t i) const { return labels_.at(i); }
  [[nodiscard]] std::size_t index_of(const std::string& label) const;
  [[nodiscard]] ElementSet set_of(std::span<const std::string> labels) const;
  [[nodiscard]] std::vector<std::string> labels_of(ElementSet s) const;

  [[nodiscard]] std::uint64_t column(std::size_t i) const { return columns_.at(i); }
  [[nodiscard]] const std::vector<std::uint64_t>& columns() const noexcept { return columns_; }

  [[nodiscard]] std::size_t rank_of(ElementSet s) const;
  [[nodiscard]] bool is_independent(ElementSet s) const { return rank_of(s) == cardinality(s); }

  /// rank() x size() matrix in reduced row echelon form.
  [[nodiscard]] Gf2Matrix representation() const;

 private:
  std::vector<std::string> labels_;
  std::vector<std::uint64_t> columns_;
  std::size_t rank_ = 0;
};

/// Matroid given by its circuit family. Used for signed-graphic matroids,
/// which need not be binary, and for checking the circuit axioms directly.
struct CircuitMatroid {
  std::vector<std::string> labels;
  Family circuits;

  [[nodiscard]] std::size_t size() const noexcept { return labels.size(); }
  [[nodiscard]] ElementSet ground() const noexcept { return full_set(labels.size()); }
  [[nodiscard]] bool is_independent(ElementSet s) const;
  /// Greedy rank; meaningful when the family satisfies the circuit axioms.
  [[nodiscard]] std::size_t rank_of(ElementSet s) const;
  [[nodiscard]] std::size_t rank() const { return rank_of(ground()); }
};

/// (X, Y) partition of the ground set forming a k-separation.
struct Separation {
  ElementSet side_x = 0;
  ElementSet side_y = 0;
  std::size_t order = 0;
};

/// Deleted and contracted sets (indices into the host ground set) together
/// with the element map from the resulting minor onto the target.
struct MinorWitness {
  ElementSet deleted = 0;
  ElementSet contracted = 0;
  // mapping[i] = index in the target of the i-th surviving host element.
  std::vector<std::size_t> mapping;
};

std::size_t rank_subset(const BinaryMatroid& m, std::span<const std::string> labels);

/// Minimal dependent sets, sorted lexicographically by member list.
[[nodiscard]] Family circuits(const BinaryMatroid& m, const MatroidLimits& limits = {});
[[nodiscard]] Family circuits(const CircuitMatroid& m, const MatroidLimits& limits = {});
[[nodiscard]] Family cocircuits(const BinaryMatroid& m, const MatroidLimits& limits = {});

[[nodiscard]] BinaryMatroid dual(const BinaryMatroid& m);

[[nodiscard]] BinaryMatroid delete_set(const BinaryMatroid& m, ElementSet t);
[[nodiscard]] BinaryMatroid contract_set(const BinaryMatroid& m, ElementSet t);
[[nodiscard]] BinaryMatroid restrict_to(const BinaryMatroid& m, ElementSet keep);
[[nodiscard]] BinaryMatroid delete_labels(const BinaryMatroid& m, std::span<const std::string> t);
[[nodiscard]] BinaryMatroid contract_labels(const BinaryMatroid& m, std::span<const std::string> t);

[[nodiscard]] CircuitMatroid delete_set(const CircuitMatroid& m, ElementSet t);
[[nodiscard]] CircuitMatroid contract_set(const CircuitMatroid& m, ElementSet t);

[[nodiscard]] CircuitMatroid to_circuit_matroid(const BinaryMatroid& m, const MatroidLimits& limits = {});

/// Label bijection (indices of N for each element of M) preserving circuits.
[[nodiscard]] std::optional<std::vector<std::size_t>> is_isomorphic(
    const BinaryMatroid& m, const BinaryMatroid& n, const MatroidLimits& limits = {});
[[nodiscard]] std::optional<std::vector<std::size_t>> is_isomorphic(
    const CircuitMatroid& m, const CircuitMatroid& n, const MatroidLimits& limits = {});

/// Searches for N as a minor of M. The witness is the lexicographically least
/// (contracted, deleted) pair with contracted independent and deleted
/// coindependent in M / contracted.
[[nodiscard]] std::optional<MinorWitness> has_minor(const BinaryMatroid& m,
                                                    const BinaryMatroid& n,
                                                    const MatroidLimits& limits = {});

/// M / contracted \ deleted, elements kept in host order.
[[nodiscard]] BinaryMatroid apply_witness(const BinaryMatroid& m, const MinorWitness& w);

/// Least k admitting a k-separation; nullopt means infinite connectivity.
[[nodiscard]] std::optional<std::size_t> connectivity(const BinaryMatroid& m,
                                                      const MatroidLimits& limits = {});
/// Every k-separation (X, Y); X always holds element 0, so each unordered
/// pair appears once.
[[nodiscard]] std::vector<Separation> k_separations(const BinaryMatroid& m, std::size_t k,
                                                    const MatroidLimits& limits = {});
[[nodiscard]] bool is_three_connected(const BinaryMatroid& m, const MatroidLimits& limits = {});

/// Connected components (classes of the "share a circuit" relation).
[[nodiscard]] std::vector<ElementSet> components(const BinaryMatroid& m);

[[nodiscard]] bool verify_axioms(const CircuitMatroid& m);

[[nodiscard]] BinaryMatroid direct_sum(const BinaryMatroid& m, const BinaryMatroid& n);
/// Binary 2-sum along basepoints p in M and q in N; both basepoints vanish.
[[nodiscard]] BinaryMatroid two_sum(const BinaryMatroid& m, const BinaryMatroid& n,
                                    const std::string& p, const std::string& q);

[[nodiscard]] bool same_circuits(const BinaryMatroid& a, const BinaryMatroid& b);

}  // namespace sgm
