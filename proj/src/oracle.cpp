#include "stacksort/oracle.hpp"

#include <algorithm>
#include <mutex>
#include <unordered_map>

#include "stacksort/errors.hpp"
#include "stacksort/parallel.hpp"

namespace stacksort {

namespace {

// 4 bits per entry; the oracle never runs past length 15.
constexpr std::size_t kPackLimit = 15;

std::uint64_t pack(const std::vector<int>& word) {
  std::uint64_t key = 0;
  for (int v : word) key = (key << 4) | static_cast<std::uint64_t>(v);
  return key;
}

Permutation unpack(std::uint64_t key, std::size_t n) {
  std::vector<int> word(n);
  for (std::size_t i = n; i-- > 0;) {
    word[i] = static_cast<int>(key & 0xF);
    key >>= 4;
  }
  return Permutation(std::move(word));
}

}  // namespace

void PreimageOracle::check_size(std::size_t n) const {
  if (n > max_length_ || n > kPackLimit) {
    throw Error(ErrorKind::SizeLimitExceeded,
                "length " + std::to_string(n) + " exceeds brute-force bound " + std::to_string(max_length_));
  }
}

std::set<Permutation> PreimageOracle::preimages(const Permutation& target) const {
  const std::size_t n = target.size();
  check_size(n);
  const Permutation normalized = normalize(target);
  std::vector<int> alphabet = target.entries();
  std::sort(alphabet.begin(), alphabet.end());

  std::set<Permutation> members;
  std::mutex mu;
  const auto block_count = std::max<std::size_t>(n, 1);
  run_blocks(block_count, jobs_, [&](std::size_t block) {
    std::vector<Permutation> found;
    auto visit = [&](const Permutation& sigma) {
      if (stack_sort(sigma) == normalized) found.push_back(sigma);
    };
    if (n == 0) {
      for_each_permutation(0, visit);
    } else {
      for_each_permutation_starting_with(n, static_cast<int>(block) + 1, visit);
    }
    std::lock_guard lock(mu);
    for (const auto& sigma : found) {
      std::vector<int> word;
      word.reserve(n);
      for (int v : sigma.entries()) word.push_back(alphabet[static_cast<std::size_t>(v) - 1]);
      members.emplace(std::move(word));
    }
  });
  return members;
}

BigInt PreimageOracle::fertility(const Permutation& target) const {
  return BigInt(preimages(target).size());
}

std::map<Permutation, std::uint64_t> PreimageOracle::image_counts(std::size_t n) const {
  check_size(n);
  std::unordered_map<std::uint64_t, std::uint64_t> merged;
  std::mutex mu;
  const auto block_count = std::max<std::size_t>(n, 1);
  run_blocks(block_count, jobs_, [&](std::size_t block) {
    std::unordered_map<std::uint64_t, std::uint64_t> local;
    auto visit = [&](const Permutation& sigma) { ++local[pack(stack_sort(sigma).entries())]; };
    if (n == 0) {
      for_each_permutation(0, visit);
    } else {
      for_each_permutation_starting_with(n, static_cast<int>(block) + 1, visit);
    }
    std::lock_guard lock(mu);
    for (const auto& [key, count] : local) merged[key] += count;
  });
  std::map<Permutation, std::uint64_t> out;
  for (const auto& [key, count] : merged) out.emplace(unpack(key, n), count);
  return out;
}

std::map<std::uint64_t, std::uint64_t> PreimageOracle::histogram(std::size_t n) const {
  const auto images = image_counts(n);
  std::uint64_t total = 1;
  for (std::size_t i = 2; i <= n; ++i) total *= i;
  std::map<std::uint64_t, std::uint64_t> counts;
  for (const auto& [image, fert] : images) ++counts[fert];
  if (images.size() < total) counts[0] = total - images.size();
  return counts;
}

PreimageSet preimages(const Permutation& target, std::size_t max_length) {
  return {target, PreimageOracle(max_length).preimages(target)};
}

BigInt fertility_brute(const Permutation& target, std::size_t max_length) {
  return PreimageOracle(max_length).fertility(target);
}

FertilityHistogram fertility_histogram(std::size_t n, std::size_t max_length, unsigned jobs) {
  return {n, PreimageOracle(max_length, jobs).histogram(n)};
}

}  // namespace stacksort
