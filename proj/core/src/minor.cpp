#include <algorithm>
#include <map>

#include "internal.hpp"
#include "sgm/matroid.hpp"

namespace sgm {

namespace {

// Lexicographic k-subsets of {0..n-1} as index vectors.
template <typename Visit>
bool for_each_combination(std::size_t n, std::size_t k, Visit&& visit) {
  if (k > n) return false;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    if (visit(idx)) return true;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) return false;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

bool is_simple(const BinaryMatroid& m) {
  std::vector<std::uint64_t> cols = m.columns();
  if (std::find(cols.begin(), cols.end(), 0) != cols.end()) return false;
  std::sort(cols.begin(), cols.end());
  return std::adjacent_find(cols.begin(), cols.end()) == cols.end();
}

class MinorSearch {
 public:
  MinorSearch(const BinaryMatroid& host, const BinaryMatroid& target)
      : host_(host),
        target_(target),
        matcher_(target.size(), circuits(target, MatroidLimits{kMaxGroundSet})),
        target_simple_(is_simple(target)) {}

  std::optional<MinorWitness> run() {
    const std::size_t n = host_.size();
    if (target_.size() > n || target_.rank() > host_.rank() ||
        target_.corank() > host_.corank())
      return std::nullopt;
    const std::size_t k = host_.rank() - target_.rank();
    std::optional<MinorWitness> found;
    for_each_combination(n, k, [&](const std::vector<std::size_t>& t_idx) {
      ElementSet t = 0;
      for (std::size_t i : t_idx) t |= singleton(i);
      if (host_.rank_of(t) != k) return false;
      found = search_deletions(t);
      return found.has_value();
    });
    return found;
  }

 private:
  // Columns of M / t over the remaining elements, in host order.
  std::vector<std::uint64_t> contracted_columns(ElementSet t) const {
    std::vector<std::uint64_t> cols = host_.columns();
    for (std::size_t i : members(t)) detail::quotient_by(cols, cols[i]);
    std::vector<std::uint64_t> out;
    for (std::size_t i = 0; i < host_.size(); ++i)
      if (!contains(t, i)) out.push_back(cols[i]);
    return out;
  }

  // kept: subset of the contracted ground set (compressed indices).
  std::optional<std::vector<std::size_t>> try_keep(const std::vector<std::uint64_t>& cols,
                                                   ElementSet kept) const {
    std::vector<std::uint64_t> sub;
    for (std::size_t i : members(kept)) sub.push_back(cols[i]);
    if (detail::rank_of_columns(sub, full_set(sub.size())) != target_.rank()) return std::nullopt;
    return matcher_.match_from(detail::circuits_of_columns(sub));
  }

  std::optional<MinorWitness> search_deletions(ElementSet t) {
    const std::vector<std::uint64_t> cols = contracted_columns(t);
    const std::size_t m = cols.size();
    const ElementSet remaining = host_.ground() & ~t;
    const std::size_t keep_count = target_.size();

    std::optional<MinorWitness> best;
    auto record = [&](ElementSet kept, std::vector<std::size_t> map) {
      const ElementSet deleted = detail::expand(full_set(m) & ~kept, remaining);
      if (best && !lex_less(deleted, best->deleted)) return;
      best = MinorWitness{deleted, t, std::move(map)};
    };

    if (!target_simple_) {
      // Deletion sets of fixed size in lex order: the first hit is least.
      for_each_combination(m, m - keep_count, [&](const std::vector<std::size_t>& del) {
        ElementSet kept = full_set(m);
        for (std::size_t i : del) kept &= ~singleton(i);
        if (auto map = try_keep(cols, kept)) {
          record(kept, std::move(*map));
          return true;
        }
        return false;
      });
      return best;
    }

    // Simple target: loops go, and each surviving parallel class keeps
    // exactly one representative.
    std::map<std::uint64_t, std::vector<std::size_t>> by_value;
    for (std::size_t i = 0; i < m; ++i)
      if (cols[i] != 0) by_value[cols[i]].push_back(i);
    std::vector<std::vector<std::size_t>> classes;
    for (auto& [value, idx] : by_value) classes.push_back(std::move(idx));
    std::sort(classes.begin(), classes.end());
    if (classes.size() < keep_count) return std::nullopt;

    for_each_combination(classes.size(), keep_count, [&](const std::vector<std::size_t>& pick) {
      std::vector<std::size_t> choice(pick.size(), 0);
      while (true) {
        ElementSet kept = 0;
        for (std::size_t j = 0; j < pick.size(); ++j) kept |= singleton(classes[pick[j]][choice[j]]);
        if (auto map = try_keep(cols, kept)) record(kept, std::move(*map));
        std::size_t j = pick.size();
        while (j > 0 && choice[j - 1] + 1 == classes[pick[j - 1]].size()) {
          choice[j - 1] = 0;
          --j;
        }
        if (j == 0) break;
        ++choice[j - 1];
      }
      return false;
    });
    return best;
  }

  const BinaryMatroid& host_;
  const BinaryMatroid& target_;
  detail::FamilyMatcher matcher_;
  bool target_simple_;
};

}  // namespace

std::optional<MinorWitness> has_minor(const BinaryMatroid& m, const BinaryMatroid& n,
                                      const MatroidLimits& limits) {
  if (m.size() > limits.element_bound || n.size() > limits.element_bound)
    throw BoundExceeded("has_minor: ground set exceeds bound " +
                        std::to_string(limits.element_bound));
  return MinorSearch(m, n).run();
}

}  // namespace sgm
