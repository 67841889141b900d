#include <algorithm>
#include <functional>

#include "internal.hpp"
#include "sgm/matroid.hpp"

namespace sgm {

namespace detail {

std::uint64_t mix64(std::uint64_t x) {
  // splitmix64 finalizer
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

namespace {

struct Signatures {
  std::vector<std::size_t> histogram;
  std::vector<std::uint64_t> element;
  std::vector<std::uint64_t> pair;
};

Signatures signatures_of(std::size_t n, const Family& fam) {
  Signatures s;
  s.histogram.assign(n + 2, 0);
  s.element.assign(n, 0);
  s.pair.assign(n * n, 0);
  for (ElementSet c : fam) {
    const std::size_t size = cardinality(c);
    ++s.histogram[std::min(size, n + 1)];
    const std::uint64_t h = mix64(size);
    const auto mem = members(c);
    for (std::size_t a : mem) {
      s.element[a] += h;
      for (std::size_t b : mem) s.pair[a * n + b] += h;
    }
  }
  return s;
}

}  // namespace

FamilyMatcher::FamilyMatcher(std::size_t n, Family circuits) : n_(n), family_(std::move(circuits)) {
  sorted_ = family_;
  std::sort(sorted_.begin(), sorted_.end());
  Signatures s = signatures_of(n_, family_);
  size_histogram_ = std::move(s.histogram);
  element_sig_ = std::move(s.element);
  pair_sig_ = std::move(s.pair);
}

std::optional<std::vector<std::size_t>> FamilyMatcher::match_from(const Family& other) const {
  if (other.size() != family_.size()) return std::nullopt;
  const Signatures src = signatures_of(n_, other);
  if (src.histogram != size_histogram_) return std::nullopt;
  {
    auto a = src.element;
    auto b = element_sig_;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return std::nullopt;
  }
  const std::size_t n = n_;
  if (n == 0) return std::vector<std::size_t>{};

  // Search order: start from the element with the fewest possible images,
  // then repeatedly take the element closing the most circuits.
  std::vector<std::size_t> order;
  std::vector<bool> chosen(n, false);
  auto candidates_for = [&](std::size_t a) {
    return static_cast<std::size_t>(
        std::count(element_sig_.begin(), element_sig_.end(), src.element[a]));
  };
  {
    std::size_t first = 0;
    for (std::size_t a = 1; a < n; ++a)
      if (candidates_for(a) < candidates_for(first)) first = a;
    order.push_back(first);
    chosen[first] = true;
  }
  ElementSet placed = singleton(order.front());
  while (order.size() < n) {
    std::size_t best = n;
    std::size_t best_closed = 0;
    std::uint64_t best_touch = 0;
    for (std::size_t a = 0; a < n; ++a) {
      if (chosen[a]) continue;
      const ElementSet with = placed | singleton(a);
      std::size_t closed = 0;
      std::uint64_t touch = 0;
      for (ElementSet c : other) {
        if (!contains(c, a)) continue;
        if (is_subset(c, with)) ++closed;
        touch += cardinality(c & placed);
      }
      if (best == n || closed > best_closed || (closed == best_closed && touch > best_touch)) {
        best = a;
        best_closed = closed;
        best_touch = touch;
      }
    }
    order.push_back(best);
    chosen[best] = true;
    placed |= singleton(best);
  }
  std::vector<std::size_t> position(n);
  for (std::size_t i = 0; i < n; ++i) position[order[i]] = i;
  std::vector<std::vector<ElementSet>> closing(n);
  for (ElementSet c : other) {
    std::size_t last = 0;
    for (std::size_t a : members(c)) last = std::max(last, position[a]);
    closing[last].push_back(c);
  }

  std::vector<std::size_t> image(n, n);
  std::vector<bool> used(n, false);
  auto in_target = [&](ElementSet c) {
    return std::binary_search(sorted_.begin(), sorted_.end(), c);
  };
  std::function<bool(std::size_t)> extend = [&](std::size_t depth) -> bool {
    if (depth == n) return true;
    const std::size_t a = order[depth];
    for (std::size_t b = 0; b < n; ++b) {
      if (used[b] || element_sig_[b] != src.element[a]) continue;
      if (pair_sig_[b * n + b] != src.pair[a * n + a]) continue;
      bool ok = true;
      for (std::size_t d = 0; d < depth && ok; ++d) {
        const std::size_t pa = order[d];
        ok = pair_sig_[b * n + image[pa]] == src.pair[a * n + pa];
      }
      if (!ok) continue;
      image[a] = b;
      used[b] = true;
      for (ElementSet c : closing[depth]) {
        ElementSet mapped = 0;
        for (std::size_t e : members(c)) mapped |= singleton(image[e]);
        if (!in_target(mapped)) {
          ok = false;
          break;
        }
      }
      if (ok && extend(depth + 1)) return true;
      used[b] = false;
      image[a] = n;
    }
    return false;
  };
  if (!extend(0)) return std::nullopt;
  return image;
}

}  // namespace detail

namespace {

std::vector<std::size_t> size_multiset(const Family& f) {
  std::vector<std::size_t> out;
  out.reserve(f.size());
  for (ElementSet c : f) out.push_back(cardinality(c));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::optional<std::vector<std::size_t>> is_isomorphic(const BinaryMatroid& m,
                                                      const BinaryMatroid& n,
                                                      const MatroidLimits& limits) {
  if (m.size() > limits.element_bound || n.size() > limits.element_bound)
    throw BoundExceeded("is_isomorphic: ground set exceeds bound " +
                        std::to_string(limits.element_bound));
  if (m.size() != n.size() || m.rank() != n.rank()) return std::nullopt;
  const Family cm = circuits(m, limits);
  const Family cn = circuits(n, limits);
  if (size_multiset(cm) != size_multiset(cn)) return std::nullopt;
  if (size_multiset(cocircuits(m, limits)) != size_multiset(cocircuits(n, limits)))
    return std::nullopt;
  return detail::FamilyMatcher(n.size(), cn).match_from(cm);
}

std::optional<std::vector<std::size_t>> is_isomorphic(const CircuitMatroid& m,
                                                      const CircuitMatroid& n,
                                                      const MatroidLimits& limits) {
  if (m.size() > limits.element_bound || n.size() > limits.element_bound)
    throw BoundExceeded("is_isomorphic: ground set exceeds bound " +
                        std::to_string(limits.element_bound));
  if (m.size() != n.size()) return std::nullopt;
  return detail::FamilyMatcher(n.size(), n.circuits).match_from(m.circuits);
}

}  // namespace sgm
