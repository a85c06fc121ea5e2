#pragma once

#include <stdexcept>
#include <string>

namespace lsp {

/// Structured error codes surfaced by validation and the operation
/// preconditions. Exactly one code is reported per failure.
enum class Errc {
  LengthMismatch,
  EmptyInstance,
  ProbabilityOutOfRange,
  NonPositivePayoff,
  IndexOutOfRange,
  DegenerateProbability,
  InstanceTooLarge,
  UnsupportedFamily,
  ParseError,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::EmptyInstance: return "EmptyInstance";
    case Errc::ProbabilityOutOfRange: return "ProbabilityOutOfRange";
    case Errc::NonPositivePayoff: return "NonPositivePayoff";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::DegenerateProbability: return "DegenerateProbability";
    case Errc::InstanceTooLarge: return "InstanceTooLarge";
    case Errc::UnsupportedFamily: return "UnsupportedFamily";
    case Errc::ParseError: return "ParseError";
  }
  return "UnknownError";
}

/// Exception carrying the error code and, when meaningful, the offending
/// 1-based index. `index == 0` means "not index-related".
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message, long index = 0)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message),
        code_(code),
        index_(index) {}

  Errc code() const { return code_; }
  long index() const { return index_; }

 private:
  Errc code_;
  long index_;
};

}  // namespace lsp
