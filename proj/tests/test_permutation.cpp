#include "doctest.h"

#include "stacksort/errors.hpp"
#include "stacksort/permutation.hpp"

using namespace stacksort;

namespace {

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::IoError;
}

}  // namespace

TEST_CASE("parse accepts compact, spaced and comma forms") {
  CHECK(parse_permutation("4162") == Permutation{4, 1, 6, 2});
  CHECK(parse_permutation("4 1 6 2") == Permutation{4, 1, 6, 2});
  CHECK(parse_permutation("4,1,6,2") == Permutation{4, 1, 6, 2});
  CHECK(parse_permutation("10 2 1") == Permutation{10, 2, 1});
  CHECK(parse_permutation("").empty());
}

TEST_CASE("parse rejects bad input") {
  CHECK(kind_of([] { parse_permutation("11"); }) == ErrorKind::DuplicateEntry);
  CHECK(kind_of([] { parse_permutation("1 1"); }) == ErrorKind::DuplicateEntry);
  CHECK(kind_of([] { parse_permutation("0 1"); }) == ErrorKind::NonPositiveEntry);
  CHECK(kind_of([] { parse_permutation("-2 1"); }) == ErrorKind::NonPositiveEntry);
  CHECK(kind_of([] { parse_permutation("1 x"); }) == ErrorKind::MalformedInput);
}

TEST_CASE("normalize keeps relative order") {
  CHECK(normalize(Permutation{4, 9, 2}) == Permutation{2, 3, 1});
  CHECK(normalize(Permutation{1, 2}).is_normalized());
  CHECK_FALSE(Permutation{4, 9, 2}.is_normalized());
}

TEST_CASE("stack sort examples") {
  CHECK(stack_sort(Permutation{4, 1, 6, 2}) == Permutation{1, 4, 2, 6});
  CHECK(stack_sort(Permutation{2, 1}) == Permutation{1, 2});
  CHECK(stack_sort(Permutation{2, 3, 1}) == Permutation{2, 1, 3});
  CHECK(stack_sort(Permutation{}).empty());
}

TEST_CASE("iterative and recursive sorting agree on S_n, n <= 8") {
  for (std::size_t n = 0; n <= 8; ++n) {
    std::size_t mismatches = 0;
    for_each_permutation(n, [&](const Permutation& p) {
      if (stack_sort(p) != stack_sort_recursive(p)) ++mismatches;
    });
    CHECK(mismatches == 0);
  }
}

TEST_CASE("n-1 passes sort every permutation of S_n, n <= 7") {
  for (std::size_t n = 1; n <= 7; ++n) {
    const Permutation id = Permutation::identity(n);
    bool all = true;
    for_each_permutation(n, [&](const Permutation& p) {
      Permutation q = p;
      for (std::size_t i = 0; i + 1 < n; ++i) q = stack_sort(q);
      all = all && q == id;
    });
    CHECK(all);
  }
  // 2 3 1 needs both passes.
  CHECK(stack_sort(Permutation{2, 3, 1}) != Permutation::identity(3));
}

TEST_CASE("descents") {
  CHECK(descents(Permutation{3, 1, 4, 2, 5, 6, 7}).indices == std::vector<std::size_t>{1, 3});
  CHECK(descents(Permutation::identity(5)).indices.empty());
}

TEST_CASE("direct sum shifts descents of the right summand") {
  const Permutation a{2, 1, 3};
  const Permutation b{3, 1, 2};
  const Permutation s = direct_sum(a, b);
  CHECK(s == Permutation{2, 1, 3, 6, 4, 5});
  CHECK(descents(s).indices == std::vector<std::size_t>{1, 4});
  CHECK(kind_of([] { direct_sum(Permutation{2, 5}, Permutation{1}); }) == ErrorKind::NotNormalized);
}

TEST_CASE("tilde and star") {
  CHECK(tilde(Permutation{2, 1}) == Permutation{3, 2, 1, 4});
  CHECK(star(Permutation{1, 3, 2, 4}) == Permutation{1, 3, 2});
  CHECK(star(Permutation{1}).empty());
  CHECK(kind_of([] { star(Permutation{2, 1}); }) == ErrorKind::LastEntryNotMax);
}

TEST_CASE("permutation enumeration") {
  std::size_t count = 0;
  for_each_permutation(5, [&](const Permutation&) { ++count; });
  CHECK(count == 120);
  count = 0;
  for_each_permutation_starting_with(5, 3, [&](const Permutation& p) {
    CHECK(p.at(1) == 3);
    ++count;
  });
  CHECK(count == 24);
}

TEST_CASE("text forms") {
  const Permutation p{3, 1, 2};
  CHECK(p.str() == "312");
  CHECK(p.spaced() == "3 1 2");
  CHECK(Permutation{10, 1}.str() == "10 1");
}
