#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <set>

#include "stacksort/bigint.hpp"
#include "stacksort/permutation.hpp"

namespace stacksort {

// Brute-force ground truth for s^{-1}. Everything here applies stack_sort to
// whole symmetric groups and never touches hook configurations.
class PreimageOracle {
 public:
  static constexpr std::size_t kDefaultLimit = 9;

  explicit PreimageOracle(std::size_t max_length = kDefaultLimit, unsigned jobs = 1)
      : max_length_(max_length), jobs_(jobs == 0 ? 1 : jobs) {}

  std::size_t max_length() const noexcept { return max_length_; }

  // Preimages of target, written in the target's own alphabet.
  std::set<Permutation> preimages(const Permutation& target) const;

  BigInt fertility(const Permutation& target) const;

  // fertility value -> number of elements of S_n with that fertility, built
  // from one pass of image counting.
  std::map<std::uint64_t, std::uint64_t> histogram(std::size_t n) const;

  // image -> number of preimages, for every image of S_n.
  std::map<Permutation, std::uint64_t> image_counts(std::size_t n) const;

 private:
  void check_size(std::size_t n) const;

  std::size_t max_length_;
  unsigned jobs_;
};

struct PreimageSet {
  Permutation target;
  std::set<Permutation> members;
};

PreimageSet preimages(const Permutation& target, std::size_t max_length = PreimageOracle::kDefaultLimit);
BigInt fertility_brute(const Permutation& target, std::size_t max_length = PreimageOracle::kDefaultLimit);

struct FertilityHistogram {
  std::size_t n = 0;
  std::map<std::uint64_t, std::uint64_t> counts;
};

FertilityHistogram fertility_histogram(std::size_t n, std::size_t max_length = PreimageOracle::kDefaultLimit,
                                       unsigned jobs = 1);

}  // namespace stacksort
