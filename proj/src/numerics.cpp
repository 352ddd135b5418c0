#include "cmunits/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>

#include "cmunits/error.hpp"

namespace cmunits
{

namespace
{

long checked_prec(long prec)
{
    if (prec < MPFR_PREC_MIN || prec > MPFR_PREC_MAX)
        throw Error(ErrorCode::InvalidArgument, "precision out of range: " + std::to_string(prec));
    return prec;
}

long min_prec(Real const & a, Real const & b)
{
    return std::min(a.precision(), b.precision());
}

} // namespace

std::string_view to_string(ErrorCode code) noexcept
{
    switch (code) {
    case ErrorCode::NotInUpperHalfPlane: return "NotInUpperHalfPlane";
    case ErrorCode::DegenerateNome: return "DegenerateNome";
    case ErrorCode::TruncationLimit: return "TruncationLimit";
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::PoleAtLatticePoint: return "PoleAtLatticePoint";
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::NotFundamental: return "NotFundamental";
    case ErrorCode::ExcludedField: return "ExcludedField";
    case ErrorCode::NotImaginary: return "NotImaginary";
    case ErrorCode::NotCoprime: return "NotCoprime";
    case ErrorCode::UnsupportedExpr: return "UnsupportedExpr";
    case ErrorCode::RoundingFailure: return "RoundingFailure";
    case ErrorCode::HypothesisViolation: return "HypothesisViolation";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

// ---------------------------------------------------------------- Real

Real::Real(long prec)
{
    mpfr_init2(v_, checked_prec(prec));
    mpfr_set_zero(v_, 1);
}

Real::Real(long value, long prec)
{
    mpfr_init2(v_, checked_prec(prec));
    mpfr_set_si(v_, value, MPFR_RNDN);
}

Real::Real(double value, long prec)
{
    mpfr_init2(v_, checked_prec(prec));
    mpfr_set_d(v_, value, MPFR_RNDN);
}

Real::Real(Rational const & value, long prec)
{
    mpfr_init2(v_, checked_prec(prec));
    mpfr_set_si(v_, value.numerator(), MPFR_RNDN);
    mpfr_div_si(v_, v_, value.denominator(), MPFR_RNDN);
}

Real::Real(mpz_class const & value, long prec)
{
    mpfr_init2(v_, checked_prec(prec));
    mpfr_set_z(v_, value.get_mpz_t(), MPFR_RNDN);
}

Real::Real(std::string const & decimal, long prec)
{
    mpfr_init2(v_, checked_prec(prec));
    if (mpfr_set_str(v_, decimal.c_str(), 10, MPFR_RNDN) != 0)
        throw Error(ErrorCode::InvalidArgument, "not a decimal number: '" + decimal + "'");
}

Real::Real(Real const & other)
{
    mpfr_init2(v_, mpfr_get_prec(other.v_));
    mpfr_set(v_, other.v_, MPFR_RNDN);
}

Real::Real(Real && other) noexcept
{
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_swap(v_, other.v_);
}

Real & Real::operator=(Real const & other)
{
    if (this != &other) {
        mpfr_set_prec(v_, mpfr_get_prec(other.v_));
        mpfr_set(v_, other.v_, MPFR_RNDN);
    }
    return *this;
}

Real & Real::operator=(Real && other) noexcept
{
    mpfr_swap(v_, other.v_);
    return *this;
}

Real::~Real()
{
    mpfr_clear(v_);
}

Real Real::with_precision(long prec) const
{
    Real r(prec);
    mpfr_set(r.v_, v_, MPFR_RNDN);
    return r;
}

mpz_class Real::round_to_integer() const
{
    if (!is_finite())
        throw Error(ErrorCode::RoundingFailure, "cannot round a non-finite value");
    Real r(precision());
    mpfr_round(r.v_, v_);
    mpz_class z;
    mpfr_get_z(z.get_mpz_t(), r.v_, MPFR_RNDN);
    return z;
}

std::string Real::to_decimal() const
{
    // ceil(prec * log10 2) + 1 significant digits round-trip the binary value.
    int digits = static_cast<int>(std::ceil(static_cast<double>(precision()) * 0.30102999566398120)) + 1;
    return to_decimal(digits);
}

std::string Real::to_decimal(int digits) const
{
    char * buf = nullptr;
    mpfr_asprintf(&buf, "%.*Re", std::max(digits - 1, 0), v_);
    std::string s(buf);
    mpfr_free_str(buf);
    return s;
}

Real Real::pi(long prec)
{
    Real r(prec);
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
}

Real Real::operator-() const
{
    Real r(precision());
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
}

Real & Real::operator+=(Real const & o) { return *this = *this + o; }
Real & Real::operator-=(Real const & o) { return *this = *this - o; }
Real & Real::operator*=(Real const & o) { return *this = *this * o; }
Real & Real::operator/=(Real const & o) { return *this = *this / o; }

Real operator+(Real const & a, Real const & b)
{
    Real r(min_prec(a, b));
    mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

Real operator-(Real const & a, Real const & b)
{
    Real r(min_prec(a, b));
    mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

Real operator*(Real const & a, Real const & b)
{
    Real r(min_prec(a, b));
    mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

Real operator/(Real const & a, Real const & b)
{
    Real r(min_prec(a, b));
    mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

Real operator*(Real const & a, long b)
{
    Real r(a.precision());
    mpfr_mul_si(r.v_, a.v_, b, MPFR_RNDN);
    return r;
}

Real operator/(Real const & a, long b)
{
    Real r(a.precision());
    mpfr_div_si(r.v_, a.v_, b, MPFR_RNDN);
    return r;
}

#define CMUNITS_UNARY(name, fn)                                                                    \
    Real name(Real const & x)                                                                      \
    {                                                                                              \
        Real r(x.precision());                                                                     \
        fn(r.get(), x.get(), MPFR_RNDN);                                                           \
        return r;                                                                                  \
    }

CMUNITS_UNARY(abs, mpfr_abs)
CMUNITS_UNARY(sqrt, mpfr_sqrt)
CMUNITS_UNARY(exp, mpfr_exp)
CMUNITS_UNARY(log, mpfr_log)
CMUNITS_UNARY(sin, mpfr_sin)
CMUNITS_UNARY(cos, mpfr_cos)

#undef CMUNITS_UNARY

Real atan2(Real const & y, Real const & x)
{
    Real r(min_prec(y, x));
    mpfr_atan2(r.get(), y.get(), x.get(), MPFR_RNDN);
    return r;
}

Real pow(Real const & x, Real const & y)
{
    Real r(min_prec(x, y));
    mpfr_pow(r.get(), x.get(), y.get(), MPFR_RNDN);
    return r;
}

Real min(Real const & a, Real const & b) { return a <= b ? a : b; }
Real max(Real const & a, Real const & b) { return a >= b ? a : b; }

// ---------------------------------------------------------- BigComplex

Real BigComplex::norm() const { return re_ * re_ + im_ * im_; }

Real BigComplex::abs() const
{
    Real r(precision());
    mpfr_hypot(r.get(), re_.get(), im_.get(), MPFR_RNDN);
    return r;
}

Real BigComplex::arg() const { return atan2(im_, re_); }

BigComplex & BigComplex::operator+=(BigComplex const & o)
{
    re_ = re_ + o.re_;
    im_ = im_ + o.im_;
    return *this;
}

BigComplex & BigComplex::operator-=(BigComplex const & o)
{
    re_ = re_ - o.re_;
    im_ = im_ - o.im_;
    return *this;
}

BigComplex & BigComplex::operator*=(BigComplex const & o)
{
    Real re = re_ * o.re_ - im_ * o.im_;
    Real im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

BigComplex & BigComplex::operator/=(BigComplex const & o)
{
    Real den = o.norm();
    Real re = (re_ * o.re_ + im_ * o.im_) / den;
    Real im = (im_ * o.re_ - re_ * o.im_) / den;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

std::string BigComplex::to_decimal() const
{
    return re_.to_decimal() + (im_.sign() < 0 ? " - " : " + ") + cmunits::abs(im_).to_decimal() + "i";
}

BigComplex exp(BigComplex const & z)
{
    long prec = z.precision();
    Real m = exp(z.real());
    Real s(prec), c(prec);
    mpfr_sin_cos(s.get(), c.get(), z.imag().get(), MPFR_RNDN);
    return {m * c, m * s};
}

BigComplex log(BigComplex const & z)
{
    return {log(z.abs()), z.arg()};
}

BigComplex sqrt(BigComplex const & z)
{
    long prec = z.precision();
    if (z.is_zero())
        return BigComplex(prec);
    Real r = z.abs();
    if (z.real().sign() >= 0) {
        Real t = sqrt((r + z.real()) / 2);
        return {t, z.imag() / (t * 2)};
    }
    Real t = sqrt((r - z.real()) / 2);
    Real im = z.imag().sign() < 0 ? -t : t;
    return {abs(z.imag()) / (t * 2), im};
}

BigComplex pow(BigComplex const & z, long n)
{
    long prec = z.precision();
    BigComplex result(Real(1L, prec), Real(0L, prec));
    BigComplex base = z;
    unsigned long e = n < 0 ? 0UL - static_cast<unsigned long>(n) : static_cast<unsigned long>(n);
    while (e != 0) {
        if (e & 1UL)
            result *= base;
        e >>= 1;
        if (e != 0)
            base *= base;
    }
    if (n < 0)
        result = BigComplex(Real(1L, prec), Real(0L, prec)) / result;
    return result;
}

BigComplex sin(BigComplex const & z)
{
    long prec = z.precision();
    Real s(prec), c(prec), sh(prec), ch(prec);
    mpfr_sin_cos(s.get(), c.get(), z.real().get(), MPFR_RNDN);
    mpfr_sinh_cosh(sh.get(), ch.get(), z.imag().get(), MPFR_RNDN);
    return {s * ch, c * sh};
}

BigComplex unit_root(Rational const & x, long prec)
{
    // Reduce to [0, 1) exactly; quarter turns are returned exactly.
    std::int64_t den = x.denominator();
    std::int64_t num = x.numerator() % den;
    if (num < 0)
        num += den;
    Rational r(num, den);
    if (r == Rational(0))
        return BigComplex(1, 0, prec);
    if (r == Rational(1, 4))
        return BigComplex(0, 1, prec);
    if (r == Rational(1, 2))
        return BigComplex(-1, 0, prec);
    if (r == Rational(3, 4))
        return BigComplex(0, -1, prec);
    Real angle = Real::pi(prec) * Real(r, prec) * 2;
    Real s(prec), c(prec);
    mpfr_sin_cos(s.get(), c.get(), angle.get(), MPFR_RNDN);
    return {c, s};
}

Real relative_error(BigComplex const & a, BigComplex const & b)
{
    Real d = (a - b).abs();
    if (b.is_zero())
        return d;
    return d / b.abs();
}

// -------------------------------------------------------------- config

void EvalConfig::validate() const
{
    if (precision_bits < Real::min_precision)
        throw Error(ErrorCode::InvalidArgument, "precision_bits must be at least 64");
    if (guard_bits < 0 || guard_bits >= precision_bits)
        throw Error(ErrorCode::InvalidArgument, "guard_bits must satisfy 0 <= guard_bits < precision_bits");
    if (max_terms && *max_terms <= 0)
        throw Error(ErrorCode::InvalidArgument, "max_terms must be positive");
}

void require_upper_half_plane(BigComplex const & tau)
{
    if (tau.imag().sign() <= 0)
        throw Error(ErrorCode::NotInUpperHalfPlane, "Im(tau) must be positive, got " + tau.imag().to_decimal(12));
}

// ---------------------------------------------------------------- nome

BigComplex fractional_q_power(BigComplex const & tau, Rational const & x, EvalConfig const & cfg)
{
    cfg.validate();
    require_upper_half_plane(tau);
    long prec = cfg.working_precision();
    if (x == Rational(0))
        return BigComplex(1, 0, prec);

    Real re = tau.real().with_precision(prec);
    Real im = tau.imag().with_precision(prec);
    Real xr(x, prec);
    Real two_pi = Real::pi(prec) * 2;

    // e^{2 pi i x tau} = e^{-2 pi x Im tau} * e^{2 pi i x Re tau}; the angle
    // is reduced modulo one turn before scaling by 2 pi.
    Real turns = xr * re;
    Real whole(prec);
    mpfr_floor(whole.get(), turns.get());
    turns = turns - whole;
    Real modulus = exp(-(two_pi * xr * im));
    Real s(prec), c(prec);
    Real angle = two_pi * turns;
    mpfr_sin_cos(s.get(), c.get(), angle.get(), MPFR_RNDN);
    return {modulus * c, modulus * s};
}

BigComplex nome(BigComplex const & tau, EvalConfig const & cfg)
{
    return fractional_q_power(tau, Rational(1), cfg);
}

long series_truncation_length(Real const & abs_q, EvalConfig const & cfg)
{
    return series_truncation_length(abs_q, cfg, 0);
}

long series_truncation_length(Real const & abs_q, EvalConfig const & cfg, int poly_degree)
{
    cfg.validate();
    if (abs_q.sign() < 0 || abs_q >= Real(1L, abs_q.precision()))
        throw Error(ErrorCode::DegenerateNome, "|q| must lie in [0, 1), got " + abs_q.to_decimal(12));
    if (abs_q.is_zero())
        return 1;

    Real l2(abs_q.precision());
    mpfr_log2(l2.get(), abs_q.get(), MPFR_RNDN);
    double bits_per_term = -l2.to_double(); // -log2 |q| > 0
    double target = static_cast<double>(cfg.precision_bits + cfg.guard_bits);
    double k = static_cast<double>(poly_degree);

    // log2 of the tail bound  n^k |q|^n / (1 - ((n+1)/n)^k |q|).
    auto tail_log2 = [&](double n) {
        double ratio_log2 = k * std::log2((n + 1.0) / n) - bits_per_term;
        if (ratio_log2 >= 0.0)
            return 1.0; // tail bound not yet geometric
        return k * std::log2(n) - n * bits_per_term - std::log2(-std::expm1(ratio_log2 * std::log(2.0)));
    };

    // Closed-form start for k = 0, then walk upward.
    double start = (target - std::log2(-std::expm1(-bits_per_term * std::log(2.0)))) / bits_per_term;
    long n = std::max(1L, static_cast<long>(std::floor(start)));
    while (n > 1 && tail_log2(static_cast<double>(n - 1)) < -target)
        --n;
    while (!(tail_log2(static_cast<double>(n)) < -target))
        ++n;

    if (cfg.max_terms && n > *cfg.max_terms)
        throw Error(ErrorCode::TruncationLimit,
                    "series needs " + std::to_string(n) + " terms, max_terms is " + std::to_string(*cfg.max_terms));
    return n;
}

} // namespace cmunits
