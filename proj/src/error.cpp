#include "pdef/error.hpp"

namespace pdef {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::InvalidGeneratorIndex: return "InvalidGeneratorIndex";
    case ErrorCode::AlphabetMismatch: return "AlphabetMismatch";
    case ErrorCode::IdentityWord: return "IdentityWord";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UnknownGenerator: return "UnknownGenerator";
    case ErrorCode::DuplicateGenerator: return "DuplicateGenerator";
    case ErrorCode::IdentityRelator: return "IdentityRelator";
    case ErrorCode::TailNotPPower: return "TailNotPPower";
    case ErrorCode::InfinitePresentation: return "InfinitePresentation";
    case ErrorCode::KillsAllGenerators: return "KillsAllGenerators";
    case ErrorCode::SlackTooLarge: return "SlackTooLarge";
    case ErrorCode::ThetaZero: return "ThetaZero";
    case ErrorCode::ThetaNotAnnihilating: return "ThetaNotAnnihilating";
    case ErrorCode::NotInKernel: return "NotInKernel";
    case ErrorCode::LabelNotPPower: return "LabelNotPPower";
    case ErrorCode::NotVerifiable: return "NotVerifiable";
    case ErrorCode::ResourceLimit: return "ResourceLimit";
    case ErrorCode::PRankTooSmall: return "PRankTooSmall";
    case ErrorCode::ChiZero: return "ChiZero";
    case ErrorCode::ChiNotAnnihilating: return "ChiNotAnnihilating";
    case ErrorCode::NotPuchta: return "NotPuchta";
  }
  return "Unknown";
}

}  // namespace pdef
