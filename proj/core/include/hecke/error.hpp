#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hecke {

enum class ErrorCode {
  InvalidPartition,
  BeadCountTooSmall,
  SizeMismatch,
  EmptyPartition,
  SyntaxError,
  DuplicateRunner,
  RunnerOutOfRange,
  NonPartitionSubscript,
  BlockMismatch,
  WeightMismatch,
  NotERegular,
  WrongBlock,
  DifferentBlock,
  NonExactDivision,
  CorrectionDiverged,
  HypothesisUnmet,
  ExpansionResidue,
  PositivityViolation,
  SymbolMismatch,
  CacheFormat,
  InvalidArgument,
};

std::string_view to_string(ErrorCode code);

/// Single exception type for the library; callers branch on code().
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Parse failure carrying the byte offset into the input text.
class ParseError : public Error {
 public:
  ParseError(ErrorCode code, std::size_t offset, const std::string& what)
      : Error(code, what + " at offset " + std::to_string(offset)), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace hecke
