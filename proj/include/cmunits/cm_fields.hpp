#ifndef CMUNITS_CM_FIELDS_HPP
#define CMUNITS_CM_FIELDS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "cmunits/fricke_family.hpp"
#include "cmunits/numerics.hpp"

namespace cmunits
{

// Imaginary quadratic field of fundamental discriminant d, with
// O_K = [tau_K, 1] and min(tau_K, Q) = X^2 + bX + c.
struct QuadField
{
    std::int64_t discriminant;
    std::int64_t b;
    std::int64_t c;
    BigComplex tau;

    // tau_K recomputed at the requested precision.
    BigComplex tau_at(long prec) const;
};

// Throws NotImaginary, ExcludedField (-3, -4) or NotFundamental.
QuadField field_from_discriminant(std::int64_t d, long prec = 256);
bool is_fundamental_discriminant(std::int64_t d);

// Positive definite form A X^2 + B XY + C Y^2.
struct QuadForm
{
    std::int64_t a;
    std::int64_t b;
    std::int64_t c;

    std::int64_t discriminant() const { return b * b - 4 * a * c; }
    // Root (-B + sqrt(D)) / (2A) in the upper half plane.
    BigComplex root(long prec) const;
    std::string to_string() const;

    friend bool operator==(QuadForm const &, QuadForm const &) = default;
};

// All reduced primitive forms of discriminant d < 0, ordered by A then B.
std::vector<QuadForm> reduced_forms(std::int64_t d);
std::int64_t class_number(std::int64_t d);

struct WnkElement
{
    std::int64_t t;
    std::int64_t s;
    GLMatrix matrix;
};

/*
 * The group W_{N,K} = {[[t - bs, -cs], [s, t]] invertible mod N}, one
 * element per class mod +-I. Enumerated with t outer, s inner, so the
 * first representative of each class is kept.
 */
std::vector<WnkElement> wnk_elements(QuadField const & k, std::int64_t level);
std::vector<GLMatrix> wnk_group(QuadField const & k, std::int64_t level);

// Matrix of x = s tau_K + t; throws NotCoprime when x O_K is not prime to N.
GLMatrix element_to_matrix(QuadField const & k, std::int64_t s, std::int64_t t, std::int64_t level);

/*
 * Matrix M_Q in GL2(Z/N) attached to a reduced form Q of discriminant d_K:
 * for f of level N, the values f^{alpha M_Q}(tau_Q), alpha in W_{N,K},
 * are the conjugates of f(tau_K) lying over the ideal class of Q. Built
 * prime by prime and glued with the Chinese remainder theorem.
 */
GLMatrix form_class_matrix(QuadField const & k, QuadForm const & form, std::int64_t level);

} // namespace cmunits

#endif
