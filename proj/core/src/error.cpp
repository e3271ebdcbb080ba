#include "hecke/error.hpp"

namespace hecke {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidPartition: return "InvalidPartition";
    case ErrorCode::BeadCountTooSmall: return "BeadCountTooSmall";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::EmptyPartition: return "EmptyPartition";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::DuplicateRunner: return "DuplicateRunner";
    case ErrorCode::RunnerOutOfRange: return "RunnerOutOfRange";
    case ErrorCode::NonPartitionSubscript: return "NonPartitionSubscript";
    case ErrorCode::BlockMismatch: return "BlockMismatch";
    case ErrorCode::WeightMismatch: return "WeightMismatch";
    case ErrorCode::NotERegular: return "NotERegular";
    case ErrorCode::WrongBlock: return "WrongBlock";
    case ErrorCode::DifferentBlock: return "DifferentBlock";
    case ErrorCode::NonExactDivision: return "NonExactDivision";
    case ErrorCode::CorrectionDiverged: return "CorrectionDiverged";
    case ErrorCode::HypothesisUnmet: return "HypothesisUnmet";
    case ErrorCode::ExpansionResidue: return "ExpansionResidue";
    case ErrorCode::PositivityViolation: return "PositivityViolation";
    case ErrorCode::SymbolMismatch: return "SymbolMismatch";
    case ErrorCode::CacheFormat: return "CacheFormat";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace hecke
