#ifndef CMUNITS_TESTS_SUPPORT_HPP
#define CMUNITS_TESTS_SUPPORT_HPP

#include <cstdint>
#include <random>

#include "cmunits/modular_functions.hpp"
#include "cmunits/numerics.hpp"

namespace testing_support
{

using cmunits::BigComplex;
using cmunits::EvalConfig;
using cmunits::Rational;
using cmunits::Real;

inline Real pow2(long e, long prec)
{
    Real r(prec);
    mpfr_set_ui_2exp(r.get(), 1, e, MPFR_RNDN);
    return r;
}

// 2^-(P - slack) for the target precision of cfg.
inline Real tol(EvalConfig const & cfg, long slack = 24)
{
    return pow2(slack - cfg.precision_bits, cfg.working_precision());
}

inline BigComplex point(Rational re, Rational im, long prec)
{
    return {Real(re, prec), Real(im, prec)};
}

// Deterministic sampler; draws only integers so results do not depend on
// the standard library's distributions.
class Sampler
{
    std::mt19937_64 rng_;

public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}

    std::int64_t integer(std::int64_t lo, std::int64_t hi)
    {
        return lo + static_cast<std::int64_t>(rng_() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    // Re in [-1/2, 1/2], Im in [lo, hi] on a grid of 1/1000.
    BigComplex tau(long prec, Rational lo = Rational(1, 2), Rational hi = Rational(2))
    {
        Rational re(integer(-500, 500), 1000);
        auto a = (lo * Rational(1000)).numerator() / (lo * Rational(1000)).denominator();
        auto b = (hi * Rational(1000)).numerator() / (hi * Rational(1000)).denominator();
        Rational im(integer(a, b), 1000);
        return point(re, im, prec);
    }

    cmunits::IndexVector vector(std::int64_t level)
    {
        while (true) {
            std::int64_t a = integer(0, level - 1), b = integer(0, level - 1);
            if ((a != 0 || b != 0) && cmunits::gcd3(a, b, level) == 1)
                return {a, b, level};
        }
    }
};

} // namespace testing_support

#endif
