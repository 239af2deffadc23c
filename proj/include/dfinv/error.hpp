#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dfinv {

enum class ErrorCode {
    DimensionMismatch,
    NotClosedUnderReflection,
    GramNotPositiveDefinite,
    RootOnWall,
    InvalidPositiveSystem,
    NotARoot,
    GroupCapExceeded,
    UnknownPreset,
    Infeasible,
    Unbounded,
    NotFullDimensional,
    SizeLimitExceeded,
    EmptyPositivePart,
    LowerDimensionalPositivePart,
    DegenerateFacet,
    DegenerateSimplex,
    ZeroNormal,
    EmptyFunction,
    NegativeScale,
    NotWeylInvariantPolytope,
    NotWeylInvariantFunction,
    NotFano,
    NotAffineOnPositivePart,
    ParseError,
    ValidationError,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Single exception type for the library; `code()` identifies the failure.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace dfinv
