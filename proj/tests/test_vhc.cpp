#include "doctest.h"

#include <set>

#include "stacksort/constructions.hpp"
#include "stacksort/errors.hpp"
#include "stacksort/oracle.hpp"
#include "stacksort/vhc.hpp"

using namespace stacksort;

namespace {

const Permutation kExample{3, 1, 4, 2, 5, 6, 7};
const Permutation kSixteen{1, 8, 11, 4, 3, 5, 7, 6, 13, 14, 2, 12, 15, 9, 10, 16};

std::set<Composition> set_of(std::initializer_list<Composition> items) { return {items}; }

}  // namespace

TEST_CASE("example permutation has six configurations in canonical order") {
  const auto configs = enumerate_vhc(kExample);
  REQUIRE(configs.size() == 6);
  std::vector<Composition> order;
  for (const auto& c : configs) order.push_back(induced_composition(kExample, c));
  CHECK(order == std::vector<Composition>{{3, 1, 1}, {2, 1, 2}, {1, 1, 3}, {2, 2, 1}, {1, 3, 1}, {1, 2, 2}});
  CHECK(valid_compositions(kExample) ==
        set_of({{3, 1, 1}, {2, 2, 1}, {1, 3, 1}, {2, 1, 2}, {1, 2, 2}, {1, 1, 3}}));
  CHECK(fertility(kExample) == 27);
}

TEST_CASE("identity and unsorted permutations") {
  const auto id = enumerate_vhc(Permutation::identity(4));
  REQUIRE(id.size() == 1);
  CHECK(id.front().hooks.empty());
  CHECK(induced_composition(Permutation::identity(3), id.front()) == Composition{3});
  CHECK(enumerate_vhc(Permutation{2, 1}).empty());
  CHECK(valid_compositions(Permutation{2, 1}).empty());
  CHECK_FALSE(is_sorted(Permutation{2, 1}));
  CHECK_FALSE(is_sorted(Permutation{1, 3, 2}));
  CHECK(is_sorted(Permutation::identity(6)));
  CHECK(fertility(Permutation{2, 1}) == 0);
  CHECK(fertility(Permutation{}) == 1);
}

TEST_CASE("coloring of the example") {
  const auto configs = enumerate_vhc(kExample);
  const Coloring c = induced_coloring(kExample, configs.front());
  int uncolored = 0;
  for (int v : c.colors) uncolored += v == Coloring::kUncolored ? 1 : 0;
  CHECK(uncolored == 2);
  CHECK(c.colors[2] == Coloring::kUncolored);
  CHECK(c.colors[4] == Coloring::kUncolored);
  CHECK(c.colors[1] == 1);
  CHECK(c.colors[3] == 2);
  CHECK(c.colors[0] == Coloring::kSky);
}

TEST_CASE("xi_4 compositions have a single 2") {
  const Permutation x = xi(4);
  CHECK(x == Permutation{4, 3, 2, 1, 5, 6, 7, 8});
  const auto comps = valid_compositions(x);
  CHECK(comps.size() == 4);
  for (const auto& q : comps) CHECK(composition_type(q) == Composition{2, 1, 1, 1});
}

TEST_CASE("catalan numbers and weights") {
  CHECK(catalan(0) == 1);
  CHECK(catalan(3) == 5);
  CHECK(catalan(5) == 42);
  CHECK(catalan(30) == BigInt("3814986502092304"));
  CHECK(catalan(100) == BigInt("896519947090131496687170070074100632420837521538745909320"));
  CHECK(composition_weight({4, 2}) == 28);
  CHECK(composition_weight({1, 1, 1}) == 1);
  CHECK(composition_weight({3, 3}) == 25);
}

TEST_CASE("fertility examples") {
  CHECK(fertility(Permutation{1, 2}) == 2);
  CHECK(fertility(Permutation{1, 2, 3}) == 5);
  const Permutation p{1, 2, 4, 3, 5, 6, 7};
  CHECK(valid_compositions(p) == set_of({{5, 1}, {4, 2}, {3, 3}}));
  CHECK(fertility(p) == 95);
}

TEST_CASE("early exit") {
  const BoundedFertility under = fertility(kExample, BigInt(27));
  CHECK_FALSE(under.exceeded);
  CHECK(under.value == 27);
  const BoundedFertility over = fertility(kExample, BigInt(26));
  CHECK(over.exceeded);
  CHECK(over.value > 26);
}

TEST_CASE("fertility ignores the alphabet") {
  CHECK(fertility(Permutation{30, 10, 40, 20, 50, 60, 70}) == 27);
  CHECK(fertility(Permutation{5, 9, 7}) == fertility(Permutation{1, 3, 2}));
}

TEST_CASE("engine matches the oracle and compositions are well shaped, n <= 6") {
  PreimageOracle oracle(6);
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto counts = oracle.image_counts(n);
    std::size_t bad = 0;
    for_each_permutation(n, [&](const Permutation& p) {
      auto it = counts.find(p);
      const BigInt expected = it == counts.end() ? 0 : it->second;
      if (fertility(p) != expected) ++bad;
      const auto configs = enumerate_vhc(p);
      const std::size_t k = descents(p).indices.size();
      if (valid_compositions(p).size() != configs.size()) ++bad;
      for (const auto& c : configs) {
        const Composition q = induced_composition(p, c);
        int sum = 0;
        for (int part : q) {
          sum += part;
          if (part < 1) ++bad;
        }
        if (q.size() != k + 1 || sum != static_cast<int>(n - k)) ++bad;
      }
    });
    CHECK(bad == 0);
  }
}

TEST_CASE("stationary hooks") {
  const auto hooks = stationary_hooks(kSixteen);
  CHECK(std::find(hooks.begin(), hooks.end(), Hook{3, 10}) != hooks.end());
  const auto small = stationary_hooks(Permutation{3, 1, 2, 4});
  CHECK(std::find(small.begin(), small.end(), Hook{1, 4}) != small.end());
  CHECK(stationary_hooks(Permutation{1, 2, 3}).empty());
  CHECK_THROWS_AS(stationary_hooks(Permutation{2, 1}), Error);
}

TEST_CASE("factor at a stationary hook") {
  const HookFactors f = factor_at_hook(kSixteen, {3, 10});
  CHECK(f.outer == Permutation{1, 8, 11, 4, 14, 2, 12, 15, 9, 10, 16});
  CHECK(f.inner == Permutation{4, 3, 5, 7, 6, 13});
  CHECK(fertility(kSixteen) == fertility(f.outer) * fertility(f.inner));

  const HookFactors g = factor_at_hook(Permutation{3, 1, 2, 4}, {1, 4});
  CHECK(normalize(g.outer) == Permutation{2, 1, 3});
  CHECK(normalize(g.inner) == Permutation{1, 2});
  CHECK(fertility(Permutation{3, 1, 2, 4}) == 2);

  try {
    factor_at_hook(kExample, {1, 3});
    FAIL("expected NotStationary");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotStationary);
  }
}

TEST_CASE("interval domination") {
  CHECK(interval_dominates({2, 2, 1}, {3, 1, 1}, {1, 3, 1}));
  CHECK(interval_dominates({1, 2, 2}, {1, 2, 2}, {1, 2, 2}));
  // Every window of (1,3,1) reaches the smaller of the other two sums.
  CHECK(interval_dominates({1, 3, 1}, {3, 1, 1}, {1, 1, 3}));
  CHECK_FALSE(interval_dominates({1, 1, 3}, {3, 1, 1}, {1, 3, 1}));
  CHECK_THROWS_AS(interval_dominates({1, 2}, {1, 1, 1}, {1, 1, 1}), Error);
  CHECK_THROWS_AS(interval_dominates({1, 2, 1}, {1, 1, 1}, {1, 1, 1}), Error);
}

TEST_CASE("reduction examples") {
  CHECK(reduce_stationary(Permutation{2, 1, 3}, 1) == Permutation{1});
  // Every instance found in S_6 satisfies the contract.
  std::size_t instances = 0;
  for_each_permutation(6, [&](const Permutation& pi) {
    const auto comps = valid_compositions(pi);
    if (comps.empty()) return;
    const std::size_t k = comps.begin()->size() - 1;
    for (std::size_t i = 1; i <= k; ++i) {
      bool ones = true;
      for (const auto& q : comps) ones = ones && q[i] == 1;
      if (!ones) continue;
      const Permutation z = reduce_stationary(pi, i);
      std::set<Composition> projected;
      for (auto q : comps) {
        q.erase(q.begin() + static_cast<std::ptrdiff_t>(i));
        projected.insert(q);
      }
      CHECK(valid_compositions(z) == projected);
      CHECK(fertility(z) == fertility(pi));
      ++instances;
    }
  });
  CHECK(instances > 0);
  try {
    reduce_stationary(kExample, 1);
    FAIL("expected PreconditionFailed");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::PreconditionFailed);
  }
}

TEST_CASE("compositions helpers") {
  CHECK(compositions_of(4, 2) == std::vector<Composition>{{1, 3}, {2, 2}, {3, 1}});
  CHECK(composition_type({1, 2, 1, 2}) == Composition{2, 2, 1, 1});
}
