#ifndef CMUNITS_TESTS_ORACLES_HPP
#define CMUNITS_TESTS_ORACLES_HPP

// Reference computations that share no code path with the library's
// q-products: theta and pentagonal series, brute-force form counting.

#include <cstdint>
#include <numeric>

#include "cmunits/numerics.hpp"

namespace oracles
{

using cmunits::BigComplex;
using cmunits::Rational;
using cmunits::Real;

inline BigComplex cexp_i(BigComplex const & z) // e^{iz}
{
    return cmunits::exp(BigComplex(-z.imag(), z.real()));
}

// e^{pi i w} for complex w, straight from exp.
inline BigComplex epi(BigComplex const & w)
{
    long prec = w.precision();
    return cexp_i(w * Real::pi(prec));
}

// eta with the sqrt(2 pi) zeta_8 normalization, from Euler's pentagonal
// series sum (-1)^n q^{(6n+1)^2/24}.
inline BigComplex eta_pentagonal(BigComplex const & tau)
{
    long prec = tau.precision();
    BigComplex sum(0, 0, prec);
    Real cutoff = Real(1L, prec);
    mpfr_div_2si(cutoff.get(), cutoff.get(), prec + 8, MPFR_RNDN);
    for (long n = 0;; ++n) {
        bool small = true;
        for (long m : {n, -n - 1}) {
            long k = 6 * m + 1;
            // q^{k^2/24} = e^{pi i tau k^2 / 12}
            BigComplex term = epi(tau * Real(Rational(k * k, 12), prec));
            if (m % 2 != 0)
                term = -term;
            sum += term;
            small = small && term.abs() < cutoff;
        }
        if (small)
            break;
    }
    BigComplex zeta8 = epi(BigComplex(Real(Rational(1, 4), prec), Real(0L, prec)));
    return sum * zeta8 * cmunits::sqrt(Real::pi(prec) * 2L);
}

// Unnormalized eta q^{1/24} prod (1 - q^n) from the same series.
inline BigComplex eta_plain(BigComplex const & tau)
{
    long prec = tau.precision();
    BigComplex zeta8 = epi(BigComplex(Real(Rational(1, 4), prec), Real(0L, prec)));
    return eta_pentagonal(tau) / (zeta8 * cmunits::sqrt(Real::pi(prec) * 2L));
}

// theta_1(z | tau) = 2 sum_{n >= 0} (-1)^n e^{pi i tau (n + 1/2)^2} sin((2n+1) pi z).
inline BigComplex theta1(BigComplex const & z, BigComplex const & tau)
{
    long prec = tau.precision();
    BigComplex sum(0, 0, prec);
    Real cutoff = Real(1L, prec);
    mpfr_div_2si(cutoff.get(), cutoff.get(), prec + 8, MPFR_RNDN);
    Real pi = Real::pi(prec);
    for (long n = 0;; ++n) {
        BigComplex weight = epi(tau * Real(Rational((2 * n + 1) * (2 * n + 1), 4), prec));
        BigComplex term = weight * cmunits::sin(z * (pi * (2 * n + 1)));
        if (n % 2 != 0)
            term = -term;
        sum += term;
        if (weight.abs() * cmunits::exp(abs(z.imag()) * pi * (2 * n + 1)) < cutoff && n > 2)
            break;
    }
    return sum * 2L;
}

// g_v(tau) = i e^{pi i v1 (v1 tau + v2)} theta_1(v1 tau + v2 | tau) / eta_plain(tau),
// valid for any representative (v1, v2).
inline BigComplex siegel_theta(Rational const & v1, Rational const & v2, BigComplex const & tau)
{
    long prec = tau.precision();
    BigComplex z = tau * Real(v1, prec) + BigComplex(Real(v2, prec), Real(0L, prec));
    BigComplex phase = epi(z * Real(v1, prec));
    BigComplex i(0, 1, prec);
    return i * phase * theta1(z, tau) / eta_plain(tau);
}

// Class number by counting primitive reduced forms with B as the outer
// loop, C solved last.
inline std::int64_t class_number_by_b(std::int64_t d)
{
    std::int64_t count = 0;
    for (std::int64_t b = 0; b * b <= -d / 3 + 1; ++b) {
        for (std::int64_t a = std::max<std::int64_t>(b, 1); 3 * a * a <= -d; ++a) {
            std::int64_t num = b * b - d;
            if (num % (4 * a) != 0)
                continue;
            std::int64_t c = num / (4 * a);
            if (c < a || std::gcd(std::gcd(a, b), c) != 1)
                continue;
            // (a, b, c) and (a, -b, c) are both reduced unless b = 0, b = a or a = c.
            count += (b == 0 || b == a || a == c) ? 1 : 2;
        }
    }
    return count;
}

} // namespace oracles

#endif
