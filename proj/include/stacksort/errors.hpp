#pragma once

#include <stdexcept>
#include <string>

namespace stacksort {

enum class ErrorKind {
  DuplicateEntry,
  NonPositiveEntry,
  MalformedInput,
  NotNormalized,
  LastEntryNotMax,
  UnsortedPermutation,
  NotStationary,
  LengthMismatch,
  SumMismatch,
  PreconditionFailed,
  ReductionNotFound,
  SizeLimitExceeded,
  HypothesisViolated,
  CorruptRecord,
  IoError,
};

const char* to_string(ErrorKind kind);

// Every domain failure in the library is reported through this type so the
// CLI can map it onto a single exit code.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace stacksort
