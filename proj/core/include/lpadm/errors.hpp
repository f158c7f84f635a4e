#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lpadm {

enum class ErrorCode {
  InvalidSystem,
  UnsupportedTail,
  UnstableSpectrum,
  WrongSystemKind,
  NoMembership,
  WrongBranch,
  OutOfRange,
  PoleAtEvaluation,
  EmbeddingIntegralDiverges,
  IncompatibleColumns,
  NoBracket,
  ParseError,
  NotFound,
  Precondition,
};

std::string_view to_string(ErrorCode code);

// Every failure the library reports carries one of the codes above so the CLI
// can map it to an exit status without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& what);

}  // namespace lpadm
