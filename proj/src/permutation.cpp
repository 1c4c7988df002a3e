#include "stacksort/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <sstream>

#include "stacksort/errors.hpp"

namespace stacksort {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DuplicateEntry: return "DuplicateEntry";
    case ErrorKind::NonPositiveEntry: return "NonPositiveEntry";
    case ErrorKind::MalformedInput: return "MalformedInput";
    case ErrorKind::NotNormalized: return "NotNormalized";
    case ErrorKind::LastEntryNotMax: return "LastEntryNotMax";
    case ErrorKind::UnsortedPermutation: return "UnsortedPermutation";
    case ErrorKind::NotStationary: return "NotStationary";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::SumMismatch: return "SumMismatch";
    case ErrorKind::PreconditionFailed: return "PreconditionFailed";
    case ErrorKind::ReductionNotFound: return "ReductionNotFound";
    case ErrorKind::SizeLimitExceeded: return "SizeLimitExceeded";
    case ErrorKind::HypothesisViolated: return "HypothesisViolated";
    case ErrorKind::CorruptRecord: return "CorruptRecord";
    case ErrorKind::IoError: return "IoError";
  }
  return "Unknown";
}

Permutation::Permutation(std::initializer_list<int> entries)
    : Permutation(std::vector<int>(entries)) {}

Permutation::Permutation(std::vector<int> entries) : entries_(std::move(entries)) {
  std::vector<int> sorted = entries_;
  std::sort(sorted.begin(), sorted.end());
  if (!sorted.empty() && sorted.front() <= 0) {
    throw Error(ErrorKind::NonPositiveEntry,
                "entry " + std::to_string(sorted.front()) + " is not positive");
  }
  auto dup = std::adjacent_find(sorted.begin(), sorted.end());
  if (dup != sorted.end()) {
    throw Error(ErrorKind::DuplicateEntry, "entry " + std::to_string(*dup) + " repeats");
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

bool Permutation::is_normalized() const {
  // Entries are distinct and positive, so normalized iff the max is n.
  if (entries_.empty()) return true;
  return *std::max_element(entries_.begin(), entries_.end()) == static_cast<int>(size());
}

std::string Permutation::str() const {
  bool compact = std::all_of(entries_.begin(), entries_.end(), [](int v) { return v <= 9; });
  if (!compact) return spaced();
  std::string out;
  for (int v : entries_) out.push_back(static_cast<char>('0' + v));
  return out;
}

std::string Permutation::spaced() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) os << ' ';
    os << entries_[i];
  }
  return os.str();
}

Permutation parse_permutation(std::string_view text) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
      ++i;
      continue;
    }
    std::size_t start = i;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])) && text[i] != ',') ++i;
    tokens.push_back(text.substr(start, i - start));
  }
  const bool delimited = tokens.size() > 1 || text.find(',') != std::string_view::npos;

  std::vector<int> entries;
  for (auto tok : tokens) {
    if (tok.front() == '-' || tok.front() == '+') {
      if (tok.front() == '-' && tok.size() > 1 &&
          std::all_of(tok.begin() + 1, tok.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); })) {
        throw Error(ErrorKind::NonPositiveEntry, "negative entry '" + std::string(tok) + "'");
      }
      throw Error(ErrorKind::MalformedInput, "bad token '" + std::string(tok) + "'");
    }
    if (!std::all_of(tok.begin(), tok.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); })) {
      throw Error(ErrorKind::MalformedInput, "bad token '" + std::string(tok) + "'");
    }
    if (!delimited && tok.size() > 1 && tok.find('0') == std::string_view::npos) {
      for (char ch : tok) entries.push_back(ch - '0');
      continue;
    }
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) {
      throw Error(ErrorKind::MalformedInput, "entry out of range '" + std::string(tok) + "'");
    }
    entries.push_back(value);
  }
  return Permutation(std::move(entries));
}

Permutation normalize(const Permutation& w) {
  const auto& e = w.entries();
  std::vector<int> sorted = e;
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> out(e.size());
  for (std::size_t i = 0; i < e.size(); ++i) {
    out[i] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), e[i]) - sorted.begin()) + 1;
  }
  return Permutation(std::move(out));
}

Permutation stack_sort(const Permutation& p) {
  std::vector<int> stack;
  std::vector<int> out;
  out.reserve(p.size());
  for (int v : p.entries()) {
    while (!stack.empty() && stack.back() < v) {
      out.push_back(stack.back());
      stack.pop_back();
    }
    stack.push_back(v);
  }
  while (!stack.empty()) {
    out.push_back(stack.back());
    stack.pop_back();
  }
  return Permutation(std::move(out));
}

namespace {

void sort_recursive(std::vector<int>::const_iterator first, std::vector<int>::const_iterator last,
                    std::vector<int>& out) {
  if (first == last) return;
  auto max_it = std::max_element(first, last);
  sort_recursive(first, max_it, out);
  sort_recursive(max_it + 1, last, out);
  out.push_back(*max_it);
}

}  // namespace

Permutation stack_sort_recursive(const Permutation& p) {
  std::vector<int> out;
  out.reserve(p.size());
  sort_recursive(p.entries().begin(), p.entries().end(), out);
  return Permutation(std::move(out));
}

DescentSet descents(const Permutation& p) {
  DescentSet d;
  for (std::size_t i = 1; i < p.size(); ++i) {
    if (p.at(i) > p.at(i + 1)) d.indices.push_back(i);
  }
  return d;
}

namespace {

void require_normalized(const Permutation& p, const char* what) {
  if (!p.is_normalized()) {
    throw Error(ErrorKind::NotNormalized, std::string(what) + " " + p.spaced() + " is not normalized");
  }
}

}  // namespace

Permutation direct_sum(const Permutation& lhs, const Permutation& rhs) {
  require_normalized(lhs, "left summand");
  require_normalized(rhs, "right summand");
  std::vector<int> out = lhs.entries();
  const int shift = static_cast<int>(lhs.size());
  for (int v : rhs.entries()) out.push_back(v + shift);
  return Permutation(std::move(out));
}

Permutation tilde(const Permutation& p) {
  require_normalized(p, "argument");
  const int n = static_cast<int>(p.size());
  std::vector<int> out;
  out.reserve(p.size() + 2);
  out.push_back(n + 1);
  out.insert(out.end(), p.entries().begin(), p.entries().end());
  out.push_back(n + 2);
  return Permutation(std::move(out));
}

Permutation star(const Permutation& p) {
  if (p.empty() || p.at(p.size()) != static_cast<int>(p.size()) || !p.is_normalized()) {
    throw Error(ErrorKind::LastEntryNotMax, p.spaced() + " does not end in its length");
  }
  std::vector<int> out(p.entries().begin(), p.entries().end() - 1);
  return Permutation(std::move(out));
}

}  // namespace stacksort
