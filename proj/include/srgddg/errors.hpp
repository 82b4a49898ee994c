#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace srgddg {

enum class ErrorCode {
  InvalidArgument,
  InvalidGraph,
  ParseError,
  SizeCap,
  NonIntegral,
  NoHoffmanBound,
  NotPrimePower,
  Inconsistent,
  DegenerateDesign,
  ParameterMismatch,
  DesignMismatch,
  PhiNotBijective,
  ConstructionFailed,
  UnknownGenerator,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Base exception for every failure raised by the library. Outcomes that are
/// legitimate answers (a graph that is not strongly regular, a spectrum that
/// does not split over the integers, ...) are returned as values instead.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Malformed graph6 / JSON / file input. `offset` is the byte offset inside
/// the offending record, `line` the 1-based line number when reading files
/// (0 when not applicable).
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t offset, std::size_t line = 0)
      : Error(ErrorCode::ParseError, message), offset_(offset), line_(line) {}

  std::size_t offset() const noexcept { return offset_; }
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t offset_;
  std::size_t line_;
};

}  // namespace srgddg
