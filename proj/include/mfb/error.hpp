#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mfb {

enum class ErrorCode {
    IdenticalLines,
    InvalidSize,
    InvalidIncidence,
    InvalidInput,
    NoSolution,
    UnsupportedCase,
    NonIntegralEuler,
    UnsupportedLoop,
    UnknownVertex,
    NotBlowdownable,
    NotAbsorbable,
    NotSplittable,
    NotApplicable,
    NonSimpleGraph,
    MissingEuler,
    ParseError,
};

std::string_view error_code_name(ErrorCode code);

// Every domain failure in the library is reported through this type.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }
    std::string_view code_name() const { return error_code_name(code_); }

private:
    ErrorCode code_;
};

}  // namespace mfb
