#ifndef CMUNITS_UNITY_ROOT_HPP
#define CMUNITS_UNITY_ROOT_HPP

#include <cstdint>
#include <string>

#include "cmunits/numerics.hpp"

namespace cmunits
{

// Exact root of unity zeta_m^k = e^{2 pi i k/m}, kept with m minimal and
// 0 <= k < m.
class UnityRoot
{
    Rational turns_{0};

public:
    UnityRoot() = default;
    UnityRoot(std::int64_t k, std::int64_t m);
    static UnityRoot from_turns(Rational const & turns);

    std::int64_t order() const { return turns_.denominator(); }
    std::int64_t exponent() const { return turns_.numerator(); }
    Rational turns() const { return turns_; }
    bool is_one() const { return turns_ == Rational(0); }

    UnityRoot inverse() const { return from_turns(-turns_); }
    UnityRoot pow(std::int64_t e) const { return from_turns(turns_ * Rational(e)); }
    // zeta_m^k expressed with exponent over a multiple `m` of order().
    std::int64_t exponent_over(std::int64_t m) const;

    BigComplex value(long prec) const { return unit_root(turns_, prec); }
    std::string to_string() const; // "zeta_m^k"

    friend UnityRoot operator*(UnityRoot const & a, UnityRoot const & b)
    {
        return from_turns(a.turns_ + b.turns_);
    }
    friend bool operator==(UnityRoot const & a, UnityRoot const & b) { return a.turns_ == b.turns_; }
};

} // namespace cmunits

#endif
