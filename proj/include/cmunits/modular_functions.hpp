#ifndef CMUNITS_MODULAR_FUNCTIONS_HPP
#define CMUNITS_MODULAR_FUNCTIONS_HPP

#include <cstdint>
#include <ostream>
#include <string>

#include "cmunits/numerics.hpp"

namespace cmunits
{

/*
 * A vector v = (a/N, b/N) with primitive denominator N, stored reduced
 * modulo Z^2 (0 <= a, b < N). gcd(a, b, N) = 1 is enforced on
 * construction.
 */
class IndexVector
{
    std::int64_t a_ = 0;
    std::int64_t b_ = 1;
    std::int64_t n_ = 2;

public:
    IndexVector() = default;
    // Reduces a and b modulo N. Throws ZeroVector when (a, b) = (0, 0) mod
    // N (always the case for N = 1) and InvalidArgument when N < 1 or
    // gcd(a, b, N) > 1.
    IndexVector(std::int64_t a, std::int64_t b, std::int64_t level);

    std::int64_t a() const { return a_; }
    std::int64_t b() const { return b_; }
    std::int64_t level() const { return n_; }
    Rational v1() const { return {a_, n_}; }
    Rational v2() const { return {b_, n_}; }

    IndexVector negated() const { return {-a_, -b_, n_}; }

    std::string to_string() const; // "a/N,b/N"

    friend bool operator==(IndexVector const &, IndexVector const &) = default;
    friend auto operator<=>(IndexVector const &, IndexVector const &) = default;
    friend std::ostream & operator<<(std::ostream & os, IndexVector const & v) { return os << v.to_string(); }
};

std::int64_t gcd3(std::int64_t a, std::int64_t b, std::int64_t c);
std::int64_t floor_mod(std::int64_t a, std::int64_t m);

// x^2 - x + 1/6.
Rational bernoulli2(Rational const & x);
// <x> with 0 <= <x> < 1.
Rational fractional_part(Rational const & x);

// sqrt(2 pi) e^{2 pi i/8} q^{1/24} prod (1 - q^n).
BigComplex dedekind_eta(BigComplex const & tau, EvalConfig const & cfg);

// Siegel function through its q-product. The reduced representative of v
// is used.
BigComplex siegel(IndexVector const & v, BigComplex const & tau, EvalConfig const & cfg);
// The same q-product at an arbitrary rational representative (v1, v2); the
// result depends on the representative through a root of unity.
BigComplex siegel_at(Rational const & v1, Rational const & v2, BigComplex const & tau, EvalConfig const & cfg);
// ord_q g_v = B2(<v1>)/2.
Rational siegel_q_order(IndexVector const & v);

BigComplex eisenstein_g2(BigComplex const & tau, EvalConfig const & cfg);
BigComplex eisenstein_g3(BigComplex const & tau, EvalConfig const & cfg);
// g2^3 - 27 g3^2, evaluated with enough extra bits to absorb the
// cancellation (about -log2|q| bits).
BigComplex delta(BigComplex const & tau, EvalConfig const & cfg);
BigComplex j_invariant(BigComplex const & tau, EvalConfig const & cfg);

// Weierstrass p(v1 tau + v2; [tau, 1]) by its q-expansion.
BigComplex wp(IndexVector const & v, BigComplex const & tau, EvalConfig const & cfg);

/*
 * Independent reference for wp: the defining lattice sum
 *   1/z^2 + sum' (1/(z - w)^2 - 1/w^2),  w = m tau + n, |m|, |n| <= R,
 * accumulated over expanding square annuli at the precision of tau. The
 * truncation error decays like R^-2 (the odd-order terms cancel between
 * w and -w).
 */
BigComplex wp_lattice_oracle(IndexVector const & v, BigComplex const & tau, long radius);

/*
 * Extrapolated lattice sum. The square-truncated sums S(R) obey an
 * asymptotic expansion L + a_2 R^-2 + a_3 R^-3 + ...; the sums at the
 * `levels` radii radius, radius - radius/10, ... are fitted by such a
 * polynomial in 1/R and L is returned. All partial sums come from one pass.
 */
BigComplex wp_lattice_extrapolated(IndexVector const & v, BigComplex const & tau, long radius, int levels);

// -2^7 3^5 (g2 g3 / Delta) wp_v.
BigComplex fricke(IndexVector const & v, BigComplex const & tau, EvalConfig const & cfg);

} // namespace cmunits

#endif
