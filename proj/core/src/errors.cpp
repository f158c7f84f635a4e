#include "lpadm/errors.hpp"

namespace lpadm {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidSystem: return "InvalidSystem";
    case ErrorCode::UnsupportedTail: return "UnsupportedTail";
    case ErrorCode::UnstableSpectrum: return "UnstableSpectrum";
    case ErrorCode::WrongSystemKind: return "WrongSystemKind";
    case ErrorCode::NoMembership: return "NoMembership";
    case ErrorCode::WrongBranch: return "WrongBranch";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::PoleAtEvaluation: return "PoleAtEvaluation";
    case ErrorCode::EmbeddingIntegralDiverges: return "EmbeddingIntegralDiverges";
    case ErrorCode::IncompatibleColumns: return "IncompatibleColumns";
    case ErrorCode::NoBracket: return "NoBracket";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::NotFound: return "NotFound";
    case ErrorCode::Precondition: return "Precondition";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace lpadm
