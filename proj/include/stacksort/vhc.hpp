#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "stacksort/bigint.hpp"
#include "stacksort/permutation.hpp"

namespace stacksort {

// A hook drawn on a fixed permutation's plot: up from column sw, then right
// to column ne. Both are 1-based positions.
struct Hook {
  std::size_t sw = 0;
  std::size_t ne = 0;

  friend bool operator==(const Hook&, const Hook&) = default;
  friend auto operator<=>(const Hook&, const Hook&) = default;
};

// hooks[t] starts at the (t+1)-th descent top.
struct HookConfiguration {
  std::vector<Hook> hooks;

  std::size_t size() const noexcept { return hooks.size(); }
  friend bool operator==(const HookConfiguration&, const HookConfiguration&) = default;
};

using Composition = std::vector<int>;

// Color of each plot point, indexed by position - 1.
struct Coloring {
  static constexpr int kSky = 0;
  static constexpr int kUncolored = -1;

  // kSky, kUncolored, or the 1-based hook ordinal.
  std::vector<int> colors;
};

// Visits every valid hook configuration in lexicographic order of the NE
// columns. The visitor returns false to stop early.
template <typename Visit>
void for_each_vhc(const Permutation& p, Visit&& visit);

std::vector<HookConfiguration> enumerate_vhc(const Permutation& p);

Coloring induced_coloring(const Permutation& p, const HookConfiguration& config);
Composition induced_composition(const Permutation& p, const HookConfiguration& config);

std::set<Composition> valid_compositions(const Permutation& p);

const BigInt& catalan(std::size_t j);
BigInt composition_weight(const Composition& q);

BigInt fertility(const Permutation& p);

struct BoundedFertility {
  BigInt value;           // exact when !exceeded, else the partial sum that crossed the limit
  bool exceeded = false;
};

// Stops summing as soon as the running total exceeds limit.
BoundedFertility fertility(const Permutation& p, const BigInt& limit);

bool is_sorted(const Permutation& p);

// Hooks common to every valid hook configuration, ascending.
std::vector<Hook> stationary_hooks(const Permutation& p);

struct HookFactors {
  Permutation outer;  // p_1..p_{sw+1} p_ne..p_n
  Permutation inner;  // p_{sw+1}..p_{ne-1}
};

// Splits p along a stationary hook; the fertility of p is the product of the
// fertilities of the two factors.
HookFactors factor_at_hook(const Permutation& p, const Hook& hook);

// Every window sum of q is at least the smaller of the window sums of a and b.
bool interval_dominates(const Composition& q, const Composition& a, const Composition& b);

struct Reduction {
  Permutation result;
  bool used_fallback = false;
};

// Given a descent ordinal (1-based) whose part is 1 in every valid
// composition, builds a permutation two shorter whose valid compositions are
// those of p with that part deleted. The result is always re-verified.
Reduction reduce_stationary_detailed(const Permutation& p, std::size_t ordinal);
Permutation reduce_stationary(const Permutation& p, std::size_t ordinal);

// All compositions of total into parts positive parts, lexicographic.
std::vector<Composition> compositions_of(int total, std::size_t parts);

// Multiset of parts in nonincreasing order.
Composition composition_type(const Composition& q);

}  // namespace stacksort

namespace stacksort::detail {

struct VhcSearch {
  std::size_t length = 0;
  std::vector<std::size_t> tops;
  // candidates[t]: admissible NE columns for tops[t] under the no-point-above
  // rule, ascending.
  std::vector<std::vector<std::size_t>> candidates;
  // tops_below[c]: number of descent tops left of column c.
  std::vector<std::size_t> tops_below;
  // last_user[c]: 1 + the largest descent ordinal that may end at column c, or 0.
  std::vector<std::size_t> last_user;
  HookConfiguration current;

  explicit VhcSearch(const Permutation& p);

  // Non-crossing reduces to one bound: a hook still open at sw (one whose NE
  // lies right of sw) must strictly enclose the new hook. Hooks that ended
  // at or before sw impose nothing.
  std::size_t ne_bound(std::size_t sw) const {
    std::size_t bound = length + 1;
    for (const Hook& h : current.hooks) {
      if (h.ne > sw) bound = std::min(bound, h.ne);
    }
    return bound;
  }

  template <typename Visit>
  bool run(std::size_t t, Visit& visit) {
    if (t == tops.size()) return visit(static_cast<const HookConfiguration&>(current));
    const std::size_t sw = tops[t];
    const std::size_t bound = ne_bound(sw);
    const std::size_t next = t + 1;
    // Descents after t that start under the new hook must also end under it,
    // each on its own column. Count usable columns left of ne as ne grows.
    std::size_t column = next < tops.size() ? tops[next] + 1 : length + 1;
    std::size_t usable = 0;
    for (std::size_t ne : candidates[t]) {
      if (ne >= bound) break;
      for (; column < ne; ++column) usable += last_user[column] > next ? 1 : 0;
      const std::size_t trapped = tops_below[ne] > next ? tops_below[ne] - next : 0;
      if (usable < trapped) continue;
      current.hooks.push_back({sw, ne});
      const bool keep_going = run(next, visit);
      current.hooks.pop_back();
      if (!keep_going) return false;
    }
    return true;
  }
};

}  // namespace stacksort::detail

namespace stacksort {

template <typename Visit>
void for_each_vhc(const Permutation& p, Visit&& visit) {
  detail::VhcSearch search(p);
  auto adapter = [&visit](const HookConfiguration& c) -> bool {
    if constexpr (std::is_same_v<decltype(visit(c)), bool>) {
      return visit(c);
    } else {
      visit(c);
      return true;
    }
  };
  search.run(0, adapter);
}

}  // namespace stacksort
