#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "stacksort/bigint.hpp"
#include "stacksort/permutation.hpp"
#include "stacksort/vhc.hpp"

namespace stacksort {

struct SpectrumReport {
  std::size_t n = 0;
  // Each achieved positive fertility with its lexicographically least witness.
  std::map<BigInt, Permutation> witnesses;

  std::set<BigInt> achieved() const;
};

SpectrumReport spectrum(std::size_t n, unsigned jobs = 1);

enum class Verdict { Fertile, UnknownUpTo, ProvenInfertile };

const char* to_string(Verdict verdict);

struct ClassifyResult {
  BigInt f;
  Verdict verdict = Verdict::UnknownUpTo;
  std::optional<Permutation> witness;  // set iff Fertile
  std::size_t searched_n = 0;
};

// Constructions first, then an exhaustive scan of S_1..S_max_n. Reports
// ProvenInfertile only when max_n >= f + 1.
ClassifyResult classify(const BigInt& f, std::size_t max_n, unsigned jobs = 1);

// Smallest-length, then lexicographically least, permutation of length n
// with fertility f; stops each candidate's sum once it passes f.
std::optional<Permutation> find_with_fertility(const BigInt& f, std::size_t n, unsigned jobs = 1);

struct DensityReport {
  BigInt count;
  Rational ratio;
};

// Counts f in [0, N) with f != 3 (mod 4), or 27 | f, or 95 | f.
DensityReport density_lower_bound(const BigInt& upper);

// Rows are compositions; all entries positive.
struct BoundMatrix {
  std::vector<std::vector<int>> rows;

  std::size_t row_count() const noexcept { return rows.size(); }
  std::size_t column_count() const noexcept { return rows.empty() ? 0 : rows.front().size(); }
};

BoundMatrix matrix_of(const std::set<Composition>& compositions);

struct BoundValues {
  Rational n_d;
  BigInt f_d;
};

// N_D = b - 1 + (sum of entries) / a, F_D = sum of the rows' Catalan weights.
BoundValues nd_fd(const BoundMatrix& d);

// Requires every column to hold an entry other than 1; returns N_D <= F_D + 1.
bool matrix_bound_holds(const BoundMatrix& d);

// Uniform shape in [1,max_dim]^2 and entries in [1,max_entry]; any all-ones
// column gets one entry raised so the hypothesis of matrix_bound_holds holds.
BoundMatrix random_bound_matrix(std::mt19937_64& rng, int max_dim = 6, int max_entry = 5);

// false for {3,7,11,15,19,23}, true for 27, empty otherwise.
std::optional<bool> small_odd_status(const BigInt& f);

}  // namespace stacksort
