#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace sgm {

// Subsets of a ground set of at most 64 elements, bit i = element i. Every
// exhaustive routine in the library works on ground sets far below that.
using ElementSet = std::uint64_t;

inline constexpr std::size_t kMaxGroundSet = 64;

constexpr ElementSet singleton(std::size_t i) { return ElementSet{1} << i; }

constexpr ElementSet full_set(std::size_t n) {
  return n >= 64 ? ~ElementSet{0} : (ElementSet{1} << n) - 1;
}

constexpr std::size_t cardinality(ElementSet s) { return static_cast<std::size_t>(std::popcount(s)); }

constexpr bool contains(ElementSet s, std::size_t i) { return (s >> i) & 1U; }

constexpr bool is_subset(ElementSet a, ElementSet b) { return (a & ~b) == 0; }

inline std::vector<std::size_t> members(ElementSet s) {
  std::vector<std::size_t> out;
  out.reserve(cardinality(s));
  while (s != 0) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(s)));
    s &= s - 1;
  }
  return out;
}

/// Lexicographic order on the increasing member lists of two sets.
constexpr bool lex_less(ElementSet a, ElementSet b) {
  const ElementSet diff = a ^ b;
  if (diff == 0) return false;
  const ElementSet low = diff & (~diff + 1);
  const ElementSet above = ~((low << 1) - 1);
  // The set without the first differing element is smaller only when it has
  // nothing left after that point (it is a prefix of the other list).
  if (a & low) return (b & above) != 0;
  return (a & above) == 0;
}

struct LexLess {
  constexpr bool operator()(ElementSet a, ElementSet b) const { return lex_less(a, b); }
};

/// Next k-subset of an n-set in lexicographic order of member lists; returns
/// false after the last one. Start from full_set(k).
inline bool next_combination(ElementSet& s, std::size_t n) {
  // Gosper's hack walks colex order; build lex order from member indices.
  std::vector<std::size_t> idx = members(s);
  const std::size_t k = idx.size();
  if (k == 0) return false;
  std::size_t i = k;
  while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
  if (i == 0) return false;
  ++idx[i - 1];
  for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  s = 0;
  for (std::size_t v : idx) s |= singleton(v);
  return true;
}

}  // namespace sgm
