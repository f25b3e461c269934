#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace pdef {

enum class ErrorCode {
  InvalidArgument,
  InvalidGeneratorIndex,
  AlphabetMismatch,
  IdentityWord,
  SyntaxError,
  UnknownGenerator,
  DuplicateGenerator,
  IdentityRelator,
  TailNotPPower,
  InfinitePresentation,
  KillsAllGenerators,
  SlackTooLarge,
  ThetaZero,
  ThetaNotAnnihilating,
  NotInKernel,
  LabelNotPPower,
  NotVerifiable,
  ResourceLimit,
  PRankTooSmall,
  ChiZero,
  ChiNotAnnihilating,
  NotPuchta,
};

std::string_view to_string(ErrorCode code) noexcept;

// All library failures are reported through this type; `code()` is stable
// and is what the CLI maps to exit statuses.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t line, std::size_t column, const std::string& what)
      : Error(ErrorCode::SyntaxError,
              std::to_string(line) + ":" + std::to_string(column) + ": " +
                  what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace pdef
