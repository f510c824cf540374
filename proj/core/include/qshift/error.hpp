#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qshift {

enum class ErrorCode {
    NotStrictlyDecreasing,
    NonPositivePart,
    MalformedToken,
    NotContained,
    IndexOutOfRange,
    ShapeMismatch,
    InternalNonStrictContent,
    DegreeMismatch,
    VarCountMismatch,
    NotAPath,
};

std::string_view to_string(ErrorCode code);

// All domain errors raised by the library. what() is "<Code>: <detail>".
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& detail);

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace qshift
