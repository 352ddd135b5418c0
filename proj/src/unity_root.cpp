#include "cmunits/unity_root.hpp"

#include "cmunits/error.hpp"
#include "cmunits/modular_functions.hpp"

namespace cmunits
{

UnityRoot::UnityRoot(std::int64_t k, std::int64_t m)
{
    if (m <= 0)
        throw Error(ErrorCode::InvalidArgument, "root of unity order must be positive");
    turns_ = fractional_part(Rational(k, m));
}

UnityRoot UnityRoot::from_turns(Rational const & turns)
{
    UnityRoot r;
    r.turns_ = fractional_part(turns);
    return r;
}

std::int64_t UnityRoot::exponent_over(std::int64_t m) const
{
    if (m <= 0 || m % order() != 0)
        throw Error(ErrorCode::InvalidArgument,
                    "order " + std::to_string(order()) + " does not divide " + std::to_string(m));
    return exponent() * (m / order());
}

std::string UnityRoot::to_string() const
{
    return "zeta_" + std::to_string(order()) + "^" + std::to_string(exponent());
}

} // namespace cmunits
