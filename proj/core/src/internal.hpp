#pragma once

// Helpers shared between translation units of sgm_core. Not installed.

#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "sgm/element_set.hpp"
#include "sgm/matroid.hpp"

namespace sgm::detail {

/// Incremental GF(2) basis over vectors of at most 64 bits.
class XorBasis {
 public:
  /// Returns true when `v` was independent of the basis (and was added).
  bool insert(std::uint64_t v) {
    while (v != 0) {
      const int top = 63 - std::countl_zero(v);
      if (slots_[top] == 0) {
        slots_[top] = v;
        ++rank_;
        return true;
      }
      v ^= slots_[top];
    }
    return false;
  }
  [[nodiscard]] std::size_t rank() const { return rank_; }

 private:
  std::array<std::uint64_t, 64> slots_{};
  std::size_t rank_ = 0;
};

inline std::size_t rank_of_columns(std::span<const std::uint64_t> cols, ElementSet s) {
  XorBasis basis;
  while (s != 0) {
    basis.insert(cols[static_cast<std::size_t>(std::countr_zero(s))]);
    s &= s - 1;
    if (basis.rank() == 64) break;
  }
  return basis.rank();
}

/// Circuits of the vector matroid on `cols`, sorted lexicographically.
Family circuits_of_columns(std::span<const std::uint64_t> cols);

/// Maps the members of `s` that lie in `keep` onto 0..|keep|-1, preserving order.
inline ElementSet compress(ElementSet s, ElementSet keep) {
  ElementSet out = 0;
  std::size_t pos = 0;
  while (keep != 0) {
    const int i = std::countr_zero(keep);
    if ((s >> i) & 1U) out |= singleton(pos);
    ++pos;
    keep &= keep - 1;
  }
  return out;
}

/// Inverse of compress: spreads bits 0..|keep|-1 onto the members of `keep`.
inline ElementSet expand(ElementSet s, ElementSet keep) {
  ElementSet out = 0;
  std::size_t pos = 0;
  while (keep != 0) {
    const int i = std::countr_zero(keep);
    if ((s >> pos) & 1U) out |= singleton(static_cast<std::size_t>(i));
    ++pos;
    keep &= keep - 1;
  }
  return out;
}

/// Quotient of a column set by span(v): kills one coordinate where v is 1.
void quotient_by(std::vector<std::uint64_t>& cols, std::uint64_t v);

/// Isomorphism search against a fixed circuit family. Signatures derived from
/// circuit sizes prune candidate images; completed circuits must map onto
/// circuits of the target.
class FamilyMatcher {
 public:
  FamilyMatcher(std::size_t n, Family circuits);

  /// Bijection from `other`'s elements onto the target's, if one maps circuits
  /// to circuits.
  [[nodiscard]] std::optional<std::vector<std::size_t>> match_from(const Family& other) const;

  [[nodiscard]] std::size_t size() const { return n_; }
  [[nodiscard]] const Family& family() const { return family_; }

 private:
  std::size_t n_;
  Family family_;
  std::vector<ElementSet> sorted_;  // numeric order for binary search
  std::vector<std::size_t> size_histogram_;
  std::vector<std::uint64_t> element_sig_;
  std::vector<std::uint64_t> pair_sig_;  // n_ * n_
};

std::uint64_t mix64(std::uint64_t x);

}  // namespace sgm::detail
