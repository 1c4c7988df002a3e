#include "stacksort/constructions.hpp"

#include <algorithm>
#include <vector>

#include "stacksort/errors.hpp"
#include "stacksort/vhc.hpp"

namespace stacksort {

Permutation xi(std::size_t m) {
  std::vector<int> word;
  word.reserve(2 * m);
  for (std::size_t v = m; v >= 1; --v) word.push_back(static_cast<int>(v));
  for (std::size_t v = m + 1; v <= 2 * m; ++v) word.push_back(static_cast<int>(v));
  return Permutation(std::move(word));
}

Permutation one_plus(const Permutation& p) { return direct_sum(Permutation{1}, p); }

Permutation zeta(std::size_t m) {
  std::vector<int> word;
  word.reserve(2 * m + 3);
  for (std::size_t i = 1; i <= m; ++i) {
    word.push_back(static_cast<int>(m + i));
    word.push_back(static_cast<int>(i));
  }
  for (std::size_t v = 2 * m + 1; v <= 2 * m + 3; ++v) word.push_back(static_cast<int>(v));
  return Permutation(std::move(word));
}

BigInt zeta_fertility(std::size_t m) {
  const BigInt k = m + 1;
  return 5 * k + 2 * k * (k - 1);
}

Permutation product_construction(const Permutation& lambda, const Permutation& mu) {
  return direct_sum(star(lambda), tilde(mu));
}

const char* to_string(WitnessMethod method) {
  switch (method) {
    case WitnessMethod::Xi: return "xi";
    case WitnessMethod::OnePlusXi: return "one_plus_xi";
    case WitnessMethod::Zeta: return "zeta";
    case WitnessMethod::Product: return "product";
    case WitnessMethod::BaseCase: return "base-case";
    case WitnessMethod::None: return "none";
  }
  return "none";
}

namespace {

// Beyond this the families get long enough that engine verification stops
// being interactive.
const BigInt kLargestTarget = BigInt(4096);

struct Primitive {
  BigInt value;
  Permutation perm;
  WitnessMethod method;
};

// Fertility values congruent to 3 mod 4 with a known permutation ending in
// its maximum, ascending.
std::vector<Primitive> odd_primitives(const BigInt& bound) {
  std::vector<Primitive> out;
  if (bound >= 95) out.push_back({95, Permutation{1, 2, 4, 3, 5, 6, 7}, WitnessMethod::BaseCase});
  for (std::size_t m = 1; zeta_fertility(m) <= bound; ++m) {
    if (zeta_fertility(m) % 4 == 3) out.push_back({zeta_fertility(m), zeta(m), WitnessMethod::Zeta});
  }
  std::sort(out.begin(), out.end(), [](const Primitive& a, const Primitive& b) { return a.value < b.value; });
  return out;
}

WitnessReport construct(const BigInt& f) {
  WitnessReport report{f, std::nullopt, WitnessMethod::None};
  if (f < 0 || f > kLargestTarget) return report;
  if (f == 0) {
    report.witness = Permutation{2, 1};
    report.method = WitnessMethod::BaseCase;
  } else if (f == 1) {
    report.witness = Permutation{1};
    report.method = WitnessMethod::BaseCase;
  } else if (f % 2 == 0) {
    report.witness = xi(static_cast<std::size_t>(f / 2));
    report.method = WitnessMethod::Xi;
  } else if (f % 4 == 1) {
    report.witness = one_plus(xi(static_cast<std::size_t>((f - 1) / 4)));
    report.method = WitnessMethod::OnePlusXi;
  } else {
    for (const auto& prim : odd_primitives(f)) {
      if (prim.value == f) {
        report.witness = prim.perm;
        report.method = prim.method;
        return report;
      }
      if (f % prim.value != 0) continue;
      WitnessReport rest = construct(f / prim.value);
      if (rest.witness) {
        report.witness = product_construction(prim.perm, normalize(*rest.witness));
        report.method = WitnessMethod::Product;
        return report;
      }
    }
  }
  return report;
}

}  // namespace

WitnessReport witness(const BigInt& f) {
  WitnessReport report = construct(f);
  if (report.witness && fertility(*report.witness) != f) {
    report.witness.reset();
    report.method = WitnessMethod::None;
  }
  return report;
}

}  // namespace stacksort
