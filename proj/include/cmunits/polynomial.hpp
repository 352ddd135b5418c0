#ifndef CMUNITS_POLYNOMIAL_HPP
#define CMUNITS_POLYNOMIAL_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "cmunits/numerics.hpp"

namespace cmunits
{

struct IntegerPolynomial
{
    std::vector<mpz_class> coeffs; // ascending degree
    Real residual{64};              // max distance of a coefficient to its rounding
    Real error_bound{64};           // a priori bound on the expansion error
    bool monic = true;

    long degree() const { return static_cast<long>(coeffs.size()) - 1; }
    mpz_class const & constant() const { return coeffs.front(); }
    std::string to_string() const; // "X^2 - 1"
};

IntegerPolynomial polynomial_from(std::vector<mpz_class> ascending);

// Coefficients of prod (X - x_k), ascending, with the inputs sorted by
// (re, im) first.
std::vector<BigComplex> expand_product(std::vector<BigComplex> const & values);

/*
 * prod (X - x_k), expanded at the precision of the inputs after sorting
 * them by (re, im), so the result does not depend on input order. Throws
 * RoundingFailure if some coefficient is 1/4 or more away from an integer,
 * or if n 2^{-(prec-32)} prod (1 + |x_k|) reaches 1/4: at that point the
 * rounding itself means nothing.
 */
IntegerPolynomial minimal_polynomial(std::vector<BigComplex> const & values);

struct OrbitPolynomial
{
    IntegerPolynomial polynomial;
    std::size_t orbit_size;   // values supplied
    std::size_t distinct;     // after merging values closer than the tolerance
    std::size_t multiplicity; // orbit_size / distinct
};

/*
 * Merges values within 2^{-P/2} (P = input precision). Every distinct
 * value must occur equally often, otherwise RoundingFailure. The
 * polynomial is taken over the distinct values.
 */
OrbitPolynomial orbit_polynomial(std::vector<BigComplex> const & values);

// Monic with constant term +-1.
bool unit_check(IntegerPolynomial const & p);

enum class Irreducibility
{
    irreducible,
    reducible,
    inconclusive,
};

std::string_view to_string(Irreducibility verdict);

struct PrimePattern
{
    std::int64_t prime;
    std::vector<long> degrees; // factor degrees mod p, ascending
};

struct IrreducibilityResult
{
    Irreducibility verdict = Irreducibility::inconclusive;
    std::string certificate;
    std::vector<PrimePattern> patterns;
    std::optional<mpz_class> root; // integer root when reducible
};

/*
 * Factorization patterns modulo the primes below 120 at which p is
 * squarefree. Irreducible if some pattern is a single factor or no
 * proper degree is compatible with every pattern; reducible when an
 * integer root is found.
 */
IrreducibilityResult irreducibility_probe(IntegerPolynomial const & p);

} // namespace cmunits

#endif
