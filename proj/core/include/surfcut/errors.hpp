#pragma once

#include <stdexcept>
#include <string>

namespace surfcut {

enum class ErrorCode {
    // map construction
    NonInvolution,
    FixedPointTwin,
    PermutationDomainMismatch,
    NegativeWeight,
    NonCellular,
    OddGenusParityForOrientable,
    EmptyGraph,
    EmptySubgraph,
    FaceDegreeTooSmall,
    // cut graph layer
    NotACutGraph,
    NotADiskDecomposition,
    BudgetExceeded,
    // mortar / spanner
    NonPlanarBrick,
    DisconnectedTerminals,
    SpannerNotCutting,
    BrickPropertyViolation,
    // decomposition / dp
    HeavyWeightTooSmall,
    NooseExtractionFailure,
    BoundaryTooLarge,
    GluingMismatch,
    WidthCapExceeded,
    NoCutGraphMap,
    NoosesCapExceeded,
    // params / cli
    NonPositiveEpsilon,
    InfeasibleParameters,
    ParseError,
    Internal,
};

const char* error_code_name(ErrorCode c);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
    throw Error(code, what);
}

} // namespace surfcut
