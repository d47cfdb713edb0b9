#include "curvfilt/error.hpp"

namespace curvfilt {

std::string_view error_kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::AsymmetricMatrix: return "AsymmetricMatrix";
        case ErrorKind::NegativeEntry: return "NegativeEntry";
        case ErrorKind::NonzeroDiagonal: return "NonzeroDiagonal";
        case ErrorKind::TriangleViolation: return "TriangleViolation";
        case ErrorKind::NonSquareMatrix: return "NonSquareMatrix";
        case ErrorKind::EmptySpace: return "EmptySpace";
        case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorKind::InvalidSubset: return "InvalidSubset";
        case ErrorKind::CountExceedsSize: return "CountExceedsSize";
        case ErrorKind::InvalidCorrespondence: return "InvalidCorrespondence";
        case ErrorKind::EnumerationBudgetExceeded: return "EnumerationBudgetExceeded";
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::BudgetExceeded: return "BudgetExceeded";
        case ErrorKind::ModeBudgetExceeded: return "ModeBudgetExceeded";
        case ErrorKind::SimplexBudgetExceeded: return "SimplexBudgetExceeded";
        case ErrorKind::DimCapInsufficient: return "DimCapInsufficient";
        case ErrorKind::MismatchedFunctor: return "MismatchedFunctor";
        case ErrorKind::UnknownFunctor: return "UnknownFunctor";
        case ErrorKind::InvalidArgument: return "InvalidArgument";
        case ErrorKind::InsufficientCandidates: return "InsufficientCandidates";
        case ErrorKind::OddCount: return "OddCount";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::DisconnectedGraph: return "DisconnectedGraph";
        case ErrorKind::IoError: return "IoError";
    }
    return "Unknown";
}

}  // namespace curvfilt
