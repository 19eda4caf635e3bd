#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace fpaths {

enum class ErrorKind {
  StepNotInF,
  PrefixViolation,
  BelowAxis,
  NotClosed,
  TripleDescent,
  RunFormViolation,
  NotAvoider,
  FormViolation,
  NotInversionSequence,
  NotPermutation,
  WeightOutOfRange,
  WeightOnLeafOrRoot,
  EmptyTree,
  GuardExceeded,
  InexactDivision,
  ParseError,
};

const char* to_string(ErrorKind kind);

// Every validation and parse failure in the library is reported through this
// type. The meaning of `index` is stated by each validator; parsers always
// report a 0-based byte offset.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string message,
        std::optional<std::size_t> index = std::nullopt);

  ErrorKind kind() const noexcept { return kind_; }
  std::optional<std::size_t> index() const noexcept { return index_; }

 private:
  ErrorKind kind_;
  std::optional<std::size_t> index_;
};

// Throws GuardExceeded when n > guard.
void check_guard(int n, int guard, const char* what);

}  // namespace fpaths
