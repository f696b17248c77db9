#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qgrushin {

enum class ErrorCode {
    QNotPurelyImaginary,
    QZero,
    QInvalid,
    ZeroBase,
    BranchCut,
    SingularPoint,
    XiDegenerate,
    XiResonant,
    DegenerateGradient,
    DegenerateUpsilon,
    StencilInvalid,
    EmptyDomain,
    FamilyNotTranscribed,
    IncompatibleOperator,
    InvalidArgument,
};

std::string_view to_string(ErrorCode code);

/// Every failure in the library is reported through this type; callers that
/// aggregate per-point results (the harness) inspect code() instead of the text.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace qgrushin
