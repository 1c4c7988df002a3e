#include "stacksort/vhc.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <numeric>

#include "stacksort/errors.hpp"

namespace stacksort {

namespace detail {

VhcSearch::VhcSearch(const Permutation& p) : length(p.size()) {
  const std::size_t n = p.size();
  tops = descents(p).indices;
  candidates.resize(tops.size());
  last_user.assign(n + 2, 0);
  for (std::size_t t = 0; t < tops.size(); ++t) {
    const std::size_t sw = tops[t];
    int ceiling = p.at(sw);
    for (std::size_t ne = sw + 1; ne <= n; ++ne) {
      // ne qualifies iff it clears both the SW endpoint and everything between.
      if (p.at(ne) > ceiling) {
        candidates[t].push_back(ne);
        last_user[ne] = t + 1;
        ceiling = p.at(ne);
      }
    }
  }
  tops_below.assign(n + 2, 0);
  for (std::size_t c = 1, seen = 0; c <= n + 1; ++c) {
    tops_below[c] = seen;
    if (seen < tops.size() && tops[seen] == c) ++seen;
  }
  current.hooks.reserve(tops.size());
}

}  // namespace detail

std::vector<HookConfiguration> enumerate_vhc(const Permutation& p) {
  std::vector<HookConfiguration> out;
  for_each_vhc(p, [&](const HookConfiguration& c) { out.push_back(c); });
  return out;
}

Coloring induced_coloring(const Permutation& p, const HookConfiguration& config) {
  const std::size_t n = p.size();
  Coloring coloring;
  coloring.colors.assign(n, Coloring::kSky);
  for (const Hook& h : config.hooks) coloring.colors[h.ne - 1] = Coloring::kUncolored;
  for (std::size_t x = 1; x <= n; ++x) {
    if (coloring.colors[x - 1] == Coloring::kUncolored) continue;
    int best_height = 0;
    for (std::size_t t = 0; t < config.hooks.size(); ++t) {
      const Hook& h = config.hooks[t];
      if (h.sw < x && x < h.ne && (best_height == 0 || p.at(h.ne) < best_height)) {
        best_height = p.at(h.ne);
        coloring.colors[x - 1] = static_cast<int>(t) + 1;
      }
    }
  }
  return coloring;
}

Composition induced_composition(const Permutation& p, const HookConfiguration& config) {
  Composition q(config.size() + 1, 0);
  for (int c : induced_coloring(p, config).colors) {
    if (c != Coloring::kUncolored) ++q[static_cast<std::size_t>(c)];
  }
  return q;
}

std::set<Composition> valid_compositions(const Permutation& p) {
  std::set<Composition> out;
  for_each_vhc(p, [&](const HookConfiguration& c) { out.insert(induced_composition(p, c)); });
  return out;
}

const BigInt& catalan(std::size_t j) {
  constexpr std::size_t kPrecomputed = 64;
  // C_{m+1} = C_m * 2(2m+1) / (m+2)
  static const std::deque<BigInt> small = [] {
    std::deque<BigInt> t{BigInt(1)};
    for (std::size_t m = 0; t.size() < kPrecomputed; ++m) t.push_back(t.back() * (2 * (2 * m + 1)) / (m + 2));
    return t;
  }();
  if (j < kPrecomputed) return small[j];

  static std::mutex mu;
  static std::deque<BigInt> large = small;
  std::lock_guard lock(mu);
  while (large.size() <= j) {
    const std::size_t m = large.size() - 1;
    large.push_back(large.back() * (2 * (2 * m + 1)) / (m + 2));
  }
  return large[j];
}

BigInt composition_weight(const Composition& q) {
  BigInt w = 1;
  for (int part : q) w *= catalan(static_cast<std::size_t>(part));
  return w;
}

BigInt fertility(const Permutation& p) {
  BigInt total = 0;
  for_each_vhc(p, [&](const HookConfiguration& c) { total += composition_weight(induced_composition(p, c)); });
  return total;
}

BoundedFertility fertility(const Permutation& p, const BigInt& limit) {
  BoundedFertility result;
  for_each_vhc(p, [&](const HookConfiguration& c) {
    result.value += composition_weight(induced_composition(p, c));
    if (result.value > limit) {
      result.exceeded = true;
      return false;
    }
    return true;
  });
  return result;
}

bool is_sorted(const Permutation& p) {
  bool found = false;
  for_each_vhc(p, [&](const HookConfiguration&) {
    found = true;
    return false;
  });
  return found;
}

std::vector<Hook> stationary_hooks(const Permutation& p) {
  std::optional<std::vector<Hook>> common;
  for_each_vhc(p, [&](const HookConfiguration& c) {
    std::vector<Hook> hooks = c.hooks;
    std::sort(hooks.begin(), hooks.end());
    if (!common) {
      common = std::move(hooks);
    } else {
      std::vector<Hook> merged;
      std::set_intersection(common->begin(), common->end(), hooks.begin(), hooks.end(),
                            std::back_inserter(merged));
      common = std::move(merged);
    }
    return !common->empty();
  });
  if (!common) {
    throw Error(ErrorKind::UnsortedPermutation, p.spaced() + " has no valid hook configuration");
  }
  return *common;
}

HookFactors factor_at_hook(const Permutation& p, const Hook& hook) {
  const auto stationary = stationary_hooks(p);
  if (!std::binary_search(stationary.begin(), stationary.end(), hook)) {
    throw Error(ErrorKind::NotStationary, "hook (" + std::to_string(hook.sw) + "," + std::to_string(hook.ne) +
                                              ") is not stationary in " + p.spaced());
  }
  const auto& e = p.entries();
  std::vector<int> outer(e.begin(), e.begin() + static_cast<std::ptrdiff_t>(hook.sw + 1));
  outer.insert(outer.end(), e.begin() + static_cast<std::ptrdiff_t>(hook.ne - 1), e.end());
  std::vector<int> inner(e.begin() + static_cast<std::ptrdiff_t>(hook.sw),
                         e.begin() + static_cast<std::ptrdiff_t>(hook.ne - 1));
  return {Permutation(std::move(outer)), Permutation(std::move(inner))};
}

bool interval_dominates(const Composition& q, const Composition& a, const Composition& b) {
  if (q.size() != a.size() || q.size() != b.size()) {
    throw Error(ErrorKind::LengthMismatch, "compositions differ in length");
  }
  const auto sum = [](const Composition& c) { return std::accumulate(c.begin(), c.end(), 0L); };
  if (sum(q) != sum(a) || sum(q) != sum(b)) {
    throw Error(ErrorKind::SumMismatch, "compositions differ in total");
  }
  for (std::size_t lo = 0; lo < q.size(); ++lo) {
    long sq = 0, sa = 0, sb = 0;
    for (std::size_t hi = lo; hi < q.size(); ++hi) {
      sq += q[hi];
      sa += a[hi];
      sb += b[hi];
      if (sq < std::min(sa, sb)) return false;
    }
  }
  return true;
}

std::vector<Composition> compositions_of(int total, std::size_t parts) {
  std::vector<Composition> out;
  if (parts == 0) {
    if (total == 0) out.emplace_back();
    return out;
  }
  Composition current;
  auto rec = [&](auto&& self, int remaining, std::size_t slots) -> void {
    if (slots == 1) {
      if (remaining >= 1) {
        current.push_back(remaining);
        out.push_back(current);
        current.pop_back();
      }
      return;
    }
    for (int part = 1; part <= remaining - static_cast<int>(slots - 1); ++part) {
      current.push_back(part);
      self(self, remaining - part, slots - 1);
      current.pop_back();
    }
  };
  rec(rec, total, parts);
  return out;
}

Composition composition_type(const Composition& q) {
  Composition t = q;
  std::sort(t.begin(), t.end(), std::greater<>());
  return t;
}

namespace {

std::set<Composition> project_out(const std::set<Composition>& valid, std::size_t ordinal) {
  std::set<Composition> out;
  for (Composition q : valid) {
    q.erase(q.begin() + static_cast<std::ptrdiff_t>(ordinal));
    out.insert(std::move(q));
  }
  return out;
}

// Removes both endpoints of hook, keeps columns in order, and assigns values
// so that the outside points above threshold sit above the points below the
// hook, which in turn sit above the remaining outside points.
Permutation restack(const Permutation& p, const Hook& hook, int threshold) {
  const std::size_t n = p.size();
  struct Point {
    int group;  // 0 low, 1 below hook, 2 high
    int value;
    std::size_t column;
  };
  std::vector<Point> points;
  for (std::size_t x = 1; x <= n; ++x) {
    if (x == hook.sw || x == hook.ne) continue;
    int group = (hook.sw < x && x < hook.ne) ? 1 : (p.at(x) > threshold ? 2 : 0);
    points.push_back({group, p.at(x), x});
  }
  std::vector<std::size_t> order(points.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return std::tie(points[a].group, points[a].value) < std::tie(points[b].group, points[b].value);
  });
  std::vector<int> word(points.size());
  for (std::size_t rank = 0; rank < order.size(); ++rank) word[order[rank]] = static_cast<int>(rank) + 1;
  return Permutation(std::move(word));
}

}  // namespace

Reduction reduce_stationary_detailed(const Permutation& p, std::size_t ordinal) {
  const std::size_t n = p.size();
  if (n < 3) throw Error(ErrorKind::PreconditionFailed, "need length at least 3");
  const auto valid = valid_compositions(p);
  if (valid.empty()) throw Error(ErrorKind::UnsortedPermutation, p.spaced() + " is not sorted");
  const std::size_t k = descents(p).size();
  if (ordinal < 1 || ordinal > k) {
    throw Error(ErrorKind::PreconditionFailed, "descent ordinal " + std::to_string(ordinal) + " out of range");
  }
  for (const auto& q : valid) {
    if (q[ordinal] != 1) {
      throw Error(ErrorKind::PreconditionFailed, "some valid composition has part " + std::to_string(ordinal) +
                                                     " equal to " + std::to_string(q[ordinal]));
    }
  }
  const auto target = project_out(valid, ordinal);
  const Hook hook = enumerate_vhc(p).front().hooks[ordinal - 1];

  std::vector<int> thresholds{p.at(hook.sw), p.at(hook.ne), 0};
  for (std::size_t x = 1; x <= n; ++x) thresholds.push_back(p.at(x));
  for (int t : thresholds) {
    Permutation candidate = restack(p, hook, t);
    if (valid_compositions(candidate) == target) return {std::move(candidate), false};
  }

  constexpr std::size_t kFallbackLimit = 10;
  if (n - 2 <= kFallbackLimit) {
    std::optional<Permutation> found;
    for_each_permutation(n - 2, [&](const Permutation& z) {
      if (valid_compositions(z) == target) {
        found = z;
        return false;
      }
      return true;
    });
    if (found) return {std::move(*found), true};
  }
  throw Error(ErrorKind::ReductionNotFound, "no reduction of " + p.spaced() + " at descent " + std::to_string(ordinal));
}

Permutation reduce_stationary(const Permutation& p, std::size_t ordinal) {
  return reduce_stationary_detailed(p, ordinal).result;
}

}  // namespace stacksort
