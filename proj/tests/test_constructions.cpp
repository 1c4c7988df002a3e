#include "doctest.h"

#include "stacksort/constructions.hpp"
#include "stacksort/errors.hpp"
#include "stacksort/oracle.hpp"
#include "stacksort/vhc.hpp"

using namespace stacksort;

TEST_CASE("xi family") {
  CHECK(xi(1) == Permutation{1, 2});
  CHECK(xi(4) == Permutation{4, 3, 2, 1, 5, 6, 7, 8});
  for (std::size_t m = 1; m <= 6; ++m) CHECK(fertility(xi(m)) == 2 * m);
  for (std::size_t m = 1; m <= 4; ++m) CHECK(fertility_brute(xi(m)) == 2 * m);
}

TEST_CASE("one plus xi family") {
  CHECK(one_plus(xi(4)) == Permutation{1, 5, 4, 3, 2, 6, 7, 8, 9});
  CHECK(one_plus(Permutation{1}) == Permutation{1, 2});
  for (std::size_t m = 1; m <= 6; ++m) CHECK(fertility(one_plus(xi(m))) == 4 * m + 1);
}

TEST_CASE("zeta family") {
  CHECK(zeta(2) == Permutation{3, 1, 4, 2, 5, 6, 7});
  CHECK(zeta_fertility(2) == 27);
  CHECK(zeta_fertility(4) == 65);
  for (std::size_t m = 1; m <= 4; ++m) {
    const Permutation z = zeta(m);
    CHECK(fertility(z) == zeta_fertility(m));
    Composition three(m + 1, 1);
    three[0] = 3;
    Composition twos(m + 1, 1);
    twos[0] = twos[1] = 2;
    for (const auto& q : valid_compositions(z)) {
      const Composition t = composition_type(q);
      CHECK((t == three || t == twos));
    }
  }
}

TEST_CASE("product construction") {
  CHECK(product_construction(Permutation{1, 2}, Permutation{1}) == Permutation{1, 3, 2, 4});
  CHECK(fertility_brute(Permutation{1, 3, 2, 4}) == 2);
  CHECK(product_construction(Permutation{1}, Permutation{2, 1, 3}) == tilde(Permutation{2, 1, 3}));
  CHECK(fertility(product_construction(Permutation{1, 2}, Permutation{1, 2})) == 4);
  CHECK_THROWS_AS(product_construction(Permutation{2, 1}, Permutation{1}), Error);
}

TEST_CASE("tilde preserves fertility, n <= 6") {
  for (std::size_t n = 1; n <= 6; ++n) {
    std::size_t bad = 0;
    for_each_permutation(n, [&](const Permutation& p) {
      if (fertility(tilde(p)) != fertility(p)) ++bad;
    });
    CHECK(bad == 0);
  }
}

TEST_CASE("witnesses") {
  CHECK(*witness(0).witness == Permutation{2, 1});
  CHECK(*witness(1).witness == Permutation{1});
  CHECK(witness(2).method == WitnessMethod::Xi);
  CHECK(witness(5).method == WitnessMethod::OnePlusXi);
  const WitnessReport w27 = witness(27);
  REQUIRE(w27.witness);
  CHECK(fertility(*w27.witness) == 27);
  CHECK(*witness(95).witness == Permutation{1, 2, 4, 3, 5, 6, 7});
  CHECK(witness(7).method == WitnessMethod::None);
  CHECK_FALSE(witness(7).witness);
  const WitnessReport w = witness(27 * 5);
  REQUIRE(w.witness);
  CHECK(w.method == WitnessMethod::Product);
  CHECK(fertility(*w.witness) == 135);
  for (int f = 0; f <= 400; ++f) {
    const WitnessReport r = witness(f);
    if (r.witness) CHECK(fertility(*r.witness) == f);
    if (f % 4 != 3) CHECK(r.witness.has_value());
  }
  CHECK(std::string(to_string(WitnessMethod::OnePlusXi)) == "one_plus_xi");
}
