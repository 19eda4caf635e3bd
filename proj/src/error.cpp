#include "fpaths/error.hpp"

namespace fpaths {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::StepNotInF: return "StepNotInF";
    case ErrorKind::PrefixViolation: return "PrefixViolation";
    case ErrorKind::BelowAxis: return "BelowAxis";
    case ErrorKind::NotClosed: return "NotClosed";
    case ErrorKind::TripleDescent: return "TripleDescent";
    case ErrorKind::RunFormViolation: return "RunFormViolation";
    case ErrorKind::NotAvoider: return "NotAvoider";
    case ErrorKind::FormViolation: return "FormViolation";
    case ErrorKind::NotInversionSequence: return "NotInversionSequence";
    case ErrorKind::NotPermutation: return "NotPermutation";
    case ErrorKind::WeightOutOfRange: return "WeightOutOfRange";
    case ErrorKind::WeightOnLeafOrRoot: return "WeightOnLeafOrRoot";
    case ErrorKind::EmptyTree: return "EmptyTree";
    case ErrorKind::GuardExceeded: return "GuardExceeded";
    case ErrorKind::InexactDivision: return "InexactDivision";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

namespace {
std::string decorate(ErrorKind kind, const std::string& message,
                     std::optional<std::size_t> index) {
  std::string out = to_string(kind);
  if (index) out += " at " + std::to_string(*index);
  if (!message.empty()) out += ": " + message;
  return out;
}
}  // namespace

Error::Error(ErrorKind kind, std::string message, std::optional<std::size_t> index)
    : std::runtime_error(decorate(kind, message, index)), kind_(kind), index_(index) {}

void check_guard(int n, int guard, const char* what) {
  if (n > guard) {
    throw Error(ErrorKind::GuardExceeded,
                std::string(what) + ": n=" + std::to_string(n) +
                    " exceeds guard " + std::to_string(guard));
  }
}

}  // namespace fpaths
