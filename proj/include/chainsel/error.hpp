#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace chainsel {

enum class ErrorCode {
    Validation,
    NotFound,
    Conflict,
    NoActiveCriteria,
    BaselineAmbiguous,
    Degenerate,
    Io,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries a category so the CLI and the
/// HTTP service can map it to an exit status or a response code.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace chainsel
