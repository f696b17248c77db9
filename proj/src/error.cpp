#include "qgrushin/error.hpp"

namespace qgrushin {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::QNotPurelyImaginary: return "QNotPurelyImaginary";
        case ErrorCode::QZero: return "QZero";
        case ErrorCode::QInvalid: return "QInvalid";
        case ErrorCode::ZeroBase: return "ZeroBase";
        case ErrorCode::BranchCut: return "BranchCut";
        case ErrorCode::SingularPoint: return "SingularPoint";
        case ErrorCode::XiDegenerate: return "XiDegenerate";
        case ErrorCode::XiResonant: return "XiResonant";
        case ErrorCode::DegenerateGradient: return "DegenerateGradient";
        case ErrorCode::DegenerateUpsilon: return "DegenerateUpsilon";
        case ErrorCode::StencilInvalid: return "StencilInvalid";
        case ErrorCode::EmptyDomain: return "EmptyDomain";
        case ErrorCode::FamilyNotTranscribed: return "FamilyNotTranscribed";
        case ErrorCode::IncompatibleOperator: return "IncompatibleOperator";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

}  // namespace qgrushin
