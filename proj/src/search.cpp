#include "stacksort/search.hpp"

#include <atomic>
#include <mutex>

#include "stacksort/constructions.hpp"
#include "stacksort/errors.hpp"
#include "stacksort/parallel.hpp"

namespace stacksort {

std::set<BigInt> SpectrumReport::achieved() const {
  std::set<BigInt> out;
  for (const auto& [value, perm] : witnesses) out.insert(value);
  return out;
}

namespace {

// Block b of S_n is the set of permutations starting with b + 1. For n = 0
// there is one block holding the empty permutation.
template <typename Visit>
void visit_block(std::size_t n, std::size_t block, Visit&& visit) {
  if (n == 0) {
    for_each_permutation(0, visit);
  } else {
    for_each_permutation_starting_with(n, static_cast<int>(block) + 1, visit);
  }
}

std::size_t block_count(std::size_t n) { return n == 0 ? 1 : n; }

}  // namespace

SpectrumReport spectrum(std::size_t n, unsigned jobs) {
  SpectrumReport report;
  report.n = n;
  std::mutex mu;
  run_blocks(block_count(n), jobs, [&](std::size_t block) {
    std::map<BigInt, Permutation> local;
    visit_block(n, block, [&](const Permutation& p) {
      BigInt f = fertility(p);
      if (f > 0) local.try_emplace(std::move(f), p);
    });
    std::lock_guard lock(mu);
    for (auto& [value, perm] : local) {
      auto [it, inserted] = report.witnesses.try_emplace(value, perm);
      if (!inserted && perm < it->second) it->second = perm;
    }
  });
  return report;
}

std::optional<Permutation> find_with_fertility(const BigInt& f, std::size_t n, unsigned jobs) {
  const std::size_t blocks = block_count(n);
  std::atomic<std::size_t> best_block{blocks};
  std::vector<std::optional<Permutation>> hits(blocks);
  run_blocks(blocks, jobs, [&](std::size_t block) {
    visit_block(n, block, [&](const Permutation& p) {
      // A hit in an earlier block makes this one irrelevant.
      if (best_block.load(std::memory_order_relaxed) < block) return false;
      const BoundedFertility r = fertility(p, f);
      if (r.exceeded || r.value != f) return true;
      hits[block] = p;
      std::size_t current = best_block.load();
      while (block < current && !best_block.compare_exchange_weak(current, block)) {
      }
      return false;
    });
  });
  for (auto& hit : hits) {
    if (hit) return hit;
  }
  return std::nullopt;
}

const char* to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::Fertile: return "fertile";
    case Verdict::UnknownUpTo: return "unknown";
    case Verdict::ProvenInfertile: return "proven-infertile";
  }
  return "unknown";
}

ClassifyResult classify(const BigInt& f, std::size_t max_n, unsigned jobs) {
  if (f < 0) throw Error(ErrorKind::MalformedInput, "fertility target must be nonnegative");
  ClassifyResult result;
  result.f = f;
  WitnessReport built = witness(f);
  if (built.witness) {
    result.verdict = Verdict::Fertile;
    result.witness = std::move(built.witness);
    return result;
  }
  for (std::size_t n = 1; n <= max_n; ++n) {
    result.searched_n = n;
    if (auto hit = find_with_fertility(f, n, jobs)) {
      result.verdict = Verdict::Fertile;
      result.witness = std::move(hit);
      return result;
    }
  }
  result.verdict = BigInt(max_n) >= f + 1 ? Verdict::ProvenInfertile : Verdict::UnknownUpTo;
  return result;
}

namespace {

constexpr long kDensityPeriod = 4 * 27 * 95;

bool counted(long f) { return f % 4 != 3 || f % 27 == 0 || f % 95 == 0; }

long count_below(long upper) {
  long c = 0;
  for (long f = 0; f < upper; ++f) c += counted(f) ? 1 : 0;
  return c;
}

}  // namespace

DensityReport density_lower_bound(const BigInt& upper) {
  if (upper < 1) throw Error(ErrorKind::MalformedInput, "N must be positive");
  static const long per_period = count_below(kDensityPeriod);
  const BigInt periods = upper / kDensityPeriod;
  const long rest = static_cast<long>(upper % kDensityPeriod);
  DensityReport report;
  report.count = periods * per_period + count_below(rest);
  report.ratio = Rational(report.count, upper);
  return report;
}

BoundMatrix matrix_of(const std::set<Composition>& compositions) {
  BoundMatrix m;
  m.rows.assign(compositions.begin(), compositions.end());
  return m;
}

namespace {

void check_shape(const BoundMatrix& d) {
  if (d.rows.empty() || d.column_count() == 0) throw Error(ErrorKind::MalformedInput, "matrix is empty");
  for (const auto& row : d.rows) {
    if (row.size() != d.column_count()) throw Error(ErrorKind::LengthMismatch, "matrix rows differ in length");
    for (int v : row) {
      if (v < 1) throw Error(ErrorKind::MalformedInput, "matrix entries must be positive");
    }
  }
}

}  // namespace

BoundValues nd_fd(const BoundMatrix& d) {
  check_shape(d);
  BigInt total = 0;
  BoundValues out;
  for (const auto& row : d.rows) {
    for (int v : row) total += v;
    out.f_d += composition_weight(row);
  }
  out.n_d = Rational(BigInt(d.column_count()) - 1) + Rational(total, BigInt(d.row_count()));
  return out;
}

bool matrix_bound_holds(const BoundMatrix& d) {
  check_shape(d);
  for (std::size_t col = 0; col < d.column_count(); ++col) {
    bool has_non_one = false;
    for (const auto& row : d.rows) has_non_one = has_non_one || row[col] != 1;
    if (!has_non_one) {
      throw Error(ErrorKind::HypothesisViolated, "column " + std::to_string(col + 1) + " is all ones");
    }
  }
  const BoundValues v = nd_fd(d);
  return v.n_d <= Rational(v.f_d + 1);
}

BoundMatrix random_bound_matrix(std::mt19937_64& rng, int max_dim, int max_entry) {
  std::uniform_int_distribution<int> dim(1, max_dim);
  std::uniform_int_distribution<int> entry(1, max_entry);
  std::uniform_int_distribution<int> non_one(2, std::max(2, max_entry));
  const auto a = static_cast<std::size_t>(dim(rng));
  const auto b = static_cast<std::size_t>(dim(rng));
  BoundMatrix m;
  m.rows.assign(a, std::vector<int>(b));
  for (auto& row : m.rows) {
    for (int& v : row) v = entry(rng);
  }
  std::uniform_int_distribution<std::size_t> pick(0, a - 1);
  for (std::size_t col = 0; col < b; ++col) {
    bool ok = false;
    for (const auto& row : m.rows) ok = ok || row[col] != 1;
    if (!ok) m.rows[pick(rng)][col] = non_one(rng);
  }
  return m;
}

std::optional<bool> small_odd_status(const BigInt& f) {
  for (int known : {3, 7, 11, 15, 19, 23}) {
    if (f == known) return false;
  }
  if (f == 27) return true;
  return std::nullopt;
}

}  // namespace stacksort
