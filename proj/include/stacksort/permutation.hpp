#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace stacksort {

// A word of distinct positive integers in one-line notation. Positions are
// 1-based, so plot point i is (i, at(i)).
class Permutation {
 public:
  Permutation() = default;
  Permutation(std::initializer_list<int> entries);
  explicit Permutation(std::vector<int> entries);

  static Permutation identity(std::size_t n);

  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }

  // 1-based access.
  int at(std::size_t position) const { return entries_[position - 1]; }

  const std::vector<int>& entries() const noexcept { return entries_; }

  // True iff the entry set is exactly {1,...,n}.
  bool is_normalized() const;

  // Compact digit form when every entry is a single digit, else
  // space-separated.
  std::string str() const;
  // Always space-separated; the canonical key form.
  std::string spaced() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    return a.entries_ <=> b.entries_;
  }

 private:
  std::vector<int> entries_;
};

// Ascending positions d with at(d) > at(d+1).
struct DescentSet {
  std::vector<std::size_t> indices;

  std::size_t size() const noexcept { return indices.size(); }
  friend bool operator==(const DescentSet&, const DescentSet&) = default;
};

// Accepts whitespace/comma separated entries. A lone token of digits with no
// delimiter anywhere in the text is read one digit per entry unless it
// contains a 0, in which case it is a single number.
Permutation parse_permutation(std::string_view text);

Permutation normalize(const Permutation& w);

// Single pass of West's stack procedure.
Permutation stack_sort(const Permutation& p);
// s(LmR) = s(L) s(R) m.
Permutation stack_sort_recursive(const Permutation& p);

DescentSet descents(const Permutation& p);

// Places the plot of rhs above and to the right of lhs. Both must be
// normalized.
Permutation direct_sum(const Permutation& lhs, const Permutation& rhs);
// (n+1) p (n+2).
Permutation tilde(const Permutation& p);
// Drops a final maximal entry.
Permutation star(const Permutation& p);

// Calls visit(const Permutation&) for every element of S_n in lexicographic
// order; stops early when visit returns false.
template <typename Visit>
void for_each_permutation(std::size_t n, Visit&& visit);

// Same, restricted to the block of S_n whose first entry is first.
template <typename Visit>
void for_each_permutation_starting_with(std::size_t n, int first, Visit&& visit);

}  // namespace stacksort

#include <algorithm>
#include <numeric>
#include <type_traits>

namespace stacksort {

namespace detail {

template <typename Visit>
void permute_tail(std::vector<int> word, std::size_t fixed, Visit& visit) {
  do {
    Permutation p(word);
    if constexpr (std::is_same_v<decltype(visit(p)), bool>) {
      if (!visit(p)) return;
    } else {
      visit(p);
    }
  } while (std::next_permutation(word.begin() + static_cast<std::ptrdiff_t>(fixed), word.end()));
}

}  // namespace detail

template <typename Visit>
void for_each_permutation(std::size_t n, Visit&& visit) {
  std::vector<int> word(n);
  std::iota(word.begin(), word.end(), 1);
  detail::permute_tail(std::move(word), 0, visit);
}

template <typename Visit>
void for_each_permutation_starting_with(std::size_t n, int first, Visit&& visit) {
  std::vector<int> word{first};
  for (int v = 1; v <= static_cast<int>(n); ++v) {
    if (v != first) word.push_back(v);
  }
  detail::permute_tail(std::move(word), 1, visit);
}

}  // namespace stacksort
