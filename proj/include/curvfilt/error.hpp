#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace curvfilt {

enum class ErrorKind {
    AsymmetricMatrix,
    NegativeEntry,
    NonzeroDiagonal,
    TriangleViolation,
    NonSquareMatrix,
    EmptySpace,
    IndexOutOfRange,
    InvalidSubset,
    CountExceedsSize,
    InvalidCorrespondence,
    EnumerationBudgetExceeded,
    DimensionMismatch,
    BudgetExceeded,
    ModeBudgetExceeded,
    SimplexBudgetExceeded,
    DimCapInsufficient,
    MismatchedFunctor,
    UnknownFunctor,
    InvalidArgument,
    InsufficientCandidates,
    OddCount,
    ParseError,
    DisconnectedGraph,
    IoError,
};

std::string_view error_kind_name(ErrorKind kind);

/// Every module reports failures through this type; `kind()` is the
/// machine-readable tag the CLI and HTTP layers serialize.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace curvfilt
