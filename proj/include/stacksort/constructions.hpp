#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "stacksort/bigint.hpp"
#include "stacksort/permutation.hpp"

namespace stacksort {

// m(m-1)...21(m+1)...(2m), fertility 2m.
Permutation xi(std::size_t m);

// 1 (+) p. Applied to xi(m) it has fertility 4m+1.
Permutation one_plus(const Permutation& p);

// (m+1)1(m+2)2...(2m)m(2m+1)(2m+2)(2m+3).
Permutation zeta(std::size_t m);

// 5(m+1) + 4*binom(m+1, 2).
BigInt zeta_fertility(std::size_t m);

// star(lambda) (+) tilde(mu); fertility is the product of the two
// fertilities. lambda must end in its maximum.
Permutation product_construction(const Permutation& lambda, const Permutation& mu);

enum class WitnessMethod { Xi, OnePlusXi, Zeta, Product, BaseCase, None };

const char* to_string(WitnessMethod method);

struct WitnessReport {
  BigInt target;
  std::optional<Permutation> witness;
  WitnessMethod method = WitnessMethod::None;
};

// Builds a permutation with fertility f from the explicit families and
// products of them. Every returned witness has been checked against the
// engine. method None means no construction applies; it says nothing about
// whether f is a fertility number.
WitnessReport witness(const BigInt& f);

}  // namespace stacksort
