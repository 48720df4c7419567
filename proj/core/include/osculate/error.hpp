#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace osc {

enum class ErrorKind {
    Usage,                 // bad arguments or mismatched operands
    Domain,                // parameter outside a curve/function domain
    Singularity,           // vanishing speed or derivative where a quotient is needed
    FlatPoint,             // zero curvature where an osculating circle is requested
    DegenerateFamily,      // e.g. constant curvature where isolated roots were requested
    DegenerateOsculation,  // osculating object not unique
    IdenticalConic,
    IdenticalMap,
    InvalidOval,
    BboxTooSmall,
    InvalidSpec,           // malformed JSON input
    VerificationFailed,    // a figure's family did not pass its check
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace osc
