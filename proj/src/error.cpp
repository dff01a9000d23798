#include "syslab/error.hpp"

namespace syslab {

std::string_view error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::Unreachable: return "Unreachable";
    case ErrorCode::BoundaryUnsafe: return "BoundaryUnsafe";
    case ErrorCode::NotASimplex: return "NotASimplex";
    case ErrorCode::ConstructionFailed: return "ConstructionFailed";
    case ErrorCode::ConditionViolated: return "ConditionViolated";
    case ErrorCode::EmptyLayer: return "EmptyLayer";
    case ErrorCode::MalformedProfile: return "MalformedProfile";
    case ErrorCode::NoRealizingChain: return "NoRealizingChain";
    case ErrorCode::NotFlat: return "NotFlat";
    case ErrorCode::Timeout: return "Timeout";
    case ErrorCode::NoFilling: return "NoFilling";
    case ErrorCode::NotASimplexOfDisk: return "NotASimplexOfDisk";
    case ErrorCode::DegenerateDomain: return "DegenerateDomain";
    case ErrorCode::OutsideDomain: return "OutsideDomain";
    case ErrorCode::NoCrossing: return "NoCrossing";
    case ErrorCode::NoSelection: return "NoSelection";
    case ErrorCode::Inconclusive: return "Inconclusive";
    case ErrorCode::NotTranslationLike: return "NotTranslationLike";
    case ErrorCode::NoStableSegment: return "NoStableSegment";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::TaskFailed: return "TaskFailed";
    case ErrorCode::NotPlaneBacked: return "NotPlaneBacked";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::Overflow: return "Overflow";
  }
  return "Unknown";
}

}  // namespace syslab
