#include "qshift/error.hpp"

namespace qshift {

std::string_view to_string(ErrorCode code)
{
    switch (code) {
    case ErrorCode::NotStrictlyDecreasing: return "NotStrictlyDecreasing";
    case ErrorCode::NonPositivePart: return "NonPositivePart";
    case ErrorCode::MalformedToken: return "MalformedToken";
    case ErrorCode::NotContained: return "NotContained";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::InternalNonStrictContent: return "InternalNonStrictContent";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::VarCountMismatch: return "VarCountMismatch";
    case ErrorCode::NotAPath: return "NotAPath";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(to_string(code)) + ": " + detail)
    , code_(code)
{
}

} // namespace qshift
