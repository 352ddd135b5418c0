#ifndef CMUNITS_ERROR_HPP
#define CMUNITS_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace cmunits
{

enum class ErrorCode
{
    NotInUpperHalfPlane,
    DegenerateNome,
    TruncationLimit,
    ZeroVector,
    PoleAtLatticePoint,
    SingularMatrix,
    NotFundamental,
    ExcludedField,
    NotImaginary,
    NotCoprime,
    UnsupportedExpr,
    RoundingFailure,
    HypothesisViolation,
    InvalidArgument,
};

std::string_view to_string(ErrorCode code) noexcept;

// Every failure raised by the library carries one of the codes above so
// the command-line front end can map it to an exit status.
class Error : public std::runtime_error
{
    ErrorCode code_;

public:
    Error(ErrorCode code, std::string const & what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code)
    {}

    ErrorCode code() const noexcept { return code_; }
};

} // namespace cmunits

#endif
