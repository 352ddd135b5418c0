#ifndef CMUNITS_NUMERICS_HPP
#define CMUNITS_NUMERICS_HPP

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

#include <boost/rational.hpp>
#include <gmpxx.h>
#include <mpfr.h>

namespace cmunits
{

using Rational = boost::rational<std::int64_t>;

/*
 * Arbitrary-precision real number, a thin value-semantics wrapper over an
 * MPFR variable. Every value carries its own precision. The result of a
 * binary operation is computed at the smaller of the operand precisions.
 */
class Real
{
    mpfr_t v_;

public:
    static constexpr long min_precision = 64;

    explicit Real(long prec = 192);
    Real(long value, long prec);
    Real(double value, long prec);
    Real(Rational const & value, long prec);
    Real(mpz_class const & value, long prec);
    Real(std::string const & decimal, long prec);

    Real(Real const & other);
    Real(Real && other) noexcept;
    Real & operator=(Real const & other);
    Real & operator=(Real && other) noexcept;
    ~Real();

    long precision() const { return static_cast<long>(mpfr_get_prec(v_)); }
    Real with_precision(long prec) const;

    mpfr_srcptr get() const { return v_; }
    mpfr_ptr get() { return v_; }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    bool is_finite() const { return mpfr_number_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }
    // floor(log2|x|) + 1, i.e. the binary exponent; meaningless for zero.
    long exponent() const { return static_cast<long>(mpfr_get_exp(v_)); }

    // Nearest integer (ties away from zero).
    mpz_class round_to_integer() const;

    // Decimal rendering with enough significant digits to round-trip the
    // binary precision.
    std::string to_decimal() const;
    std::string to_decimal(int digits) const;

    static Real pi(long prec);

    Real operator-() const;
    Real & operator+=(Real const & o);
    Real & operator-=(Real const & o);
    Real & operator*=(Real const & o);
    Real & operator/=(Real const & o);

    friend Real operator+(Real const & a, Real const & b);
    friend Real operator-(Real const & a, Real const & b);
    friend Real operator*(Real const & a, Real const & b);
    friend Real operator/(Real const & a, Real const & b);
    friend Real operator*(Real const & a, long b);
    friend Real operator/(Real const & a, long b);

    friend bool operator<(Real const & a, Real const & b) { return mpfr_less_p(a.v_, b.v_) != 0; }
    friend bool operator>(Real const & a, Real const & b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
    friend bool operator<=(Real const & a, Real const & b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
    friend bool operator>=(Real const & a, Real const & b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }
    friend bool operator==(Real const & a, Real const & b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
    friend bool operator!=(Real const & a, Real const & b) { return !(a == b); }

    friend std::ostream & operator<<(std::ostream & os, Real const & x) { return os << x.to_decimal(); }
};

Real abs(Real const & x);
Real sqrt(Real const & x);
Real exp(Real const & x);
Real log(Real const & x);
Real sin(Real const & x);
Real cos(Real const & x);
Real atan2(Real const & y, Real const & x);
Real pow(Real const & x, Real const & y);
Real min(Real const & a, Real const & b);
Real max(Real const & a, Real const & b);

/*
 * Arbitrary-precision complex number. precision() is the smaller of the
 * component precisions.
 */
class BigComplex
{
    Real re_;
    Real im_;

public:
    explicit BigComplex(long prec = 192) : re_(prec), im_(prec) {}
    BigComplex(Real re, Real im) : re_(std::move(re)), im_(std::move(im)) {}
    explicit BigComplex(Real re) : re_(std::move(re)), im_(0L, re_.precision()) {}
    BigComplex(long re, long im, long prec) : re_(re, prec), im_(im, prec) {}

    Real const & real() const { return re_; }
    Real const & imag() const { return im_; }
    long precision() const { return std::min(re_.precision(), im_.precision()); }
    BigComplex with_precision(long prec) const
    {
        return {re_.with_precision(prec), im_.with_precision(prec)};
    }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }

    Real norm() const; // |z|^2
    Real abs() const;
    Real arg() const;
    BigComplex conj() const { return {re_, -im_}; }

    BigComplex operator-() const { return {-re_, -im_}; }
    BigComplex & operator+=(BigComplex const & o);
    BigComplex & operator-=(BigComplex const & o);
    BigComplex & operator*=(BigComplex const & o);
    BigComplex & operator/=(BigComplex const & o);

    friend BigComplex operator+(BigComplex a, BigComplex const & b) { return a += b; }
    friend BigComplex operator-(BigComplex a, BigComplex const & b) { return a -= b; }
    friend BigComplex operator*(BigComplex a, BigComplex const & b) { return a *= b; }
    friend BigComplex operator/(BigComplex a, BigComplex const & b) { return a /= b; }
    friend BigComplex operator*(BigComplex const & a, Real const & b) { return {a.re_ * b, a.im_ * b}; }
    friend BigComplex operator*(BigComplex const & a, long b) { return {a.re_ * b, a.im_ * b}; }
    friend BigComplex operator/(BigComplex const & a, Real const & b) { return {a.re_ / b, a.im_ / b}; }

    std::string to_decimal() const;
    friend std::ostream & operator<<(std::ostream & os, BigComplex const & z) { return os << z.to_decimal(); }
};

BigComplex exp(BigComplex const & z);
BigComplex log(BigComplex const & z); // principal branch
BigComplex sqrt(BigComplex const & z); // principal branch
BigComplex pow(BigComplex const & z, long n);
BigComplex sin(BigComplex const & z);
// e^{2 pi i x} for rational x, exact argument reduction mod 1.
BigComplex unit_root(Rational const & x, long prec);
// Relative distance |a - b| / |b| (absolute when b = 0).
Real relative_error(BigComplex const & a, BigComplex const & b);

struct EvalConfig
{
    long precision_bits = 192;
    long guard_bits = 24;
    // Upper bound on the number of factors/terms of any q-series; unset
    // means the truncation length is derived from the precision target.
    std::optional<long> max_terms;

    // Throws InvalidArgument unless precision_bits >= 64 and
    // 0 <= guard_bits < precision_bits.
    void validate() const;
    long working_precision() const { return precision_bits + guard_bits; }
};

// q = e^{2 pi i tau}.
BigComplex nome(BigComplex const & tau, EvalConfig const & cfg);
// e^{2 pi i x tau}, never computed as a power of the nome.
BigComplex fractional_q_power(BigComplex const & tau, Rational const & x, EvalConfig const & cfg);
// Smallest n with |q|^n / (1 - |q|) < 2^-(precision_bits + guard_bits).
long series_truncation_length(Real const & abs_q, EvalConfig const & cfg);
// Same bound, for a series whose n-th term is additionally scaled by n^k.
long series_truncation_length(Real const & abs_q, EvalConfig const & cfg, int poly_degree);

// Throws NotInUpperHalfPlane unless Im(tau) > 0.
void require_upper_half_plane(BigComplex const & tau);

} // namespace cmunits

#endif
