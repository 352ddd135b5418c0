#include "cmunits/cm_fields.hpp"

#include <cmath>
#include <numeric>
#include <set>

#include "cmunits/error.hpp"

namespace cmunits
{

namespace
{

bool is_squarefree(std::int64_t n)
{
    n = n < 0 ? -n : n;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0)
                return false;
        }
    }
    return true;
}

std::vector<std::pair<std::int64_t, std::int64_t>> prime_power_factors(std::int64_t n)
{
    std::vector<std::pair<std::int64_t, std::int64_t>> out; // (p, p^e)
    for (std::int64_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            std::int64_t pe = 1;
            while (n % p == 0) {
                n /= p;
                pe *= p;
            }
            out.emplace_back(p, pe);
        }
    }
    if (n > 1)
        out.emplace_back(n, n);
    return out;
}

} // namespace

bool is_fundamental_discriminant(std::int64_t d)
{
    if (d == 0 || d == 1)
        return false;
    std::int64_t r = floor_mod(d, 4);
    if (r == 1)
        return is_squarefree(d);
    if (r == 0) {
        std::int64_t m = d / 4;
        std::int64_t rm = floor_mod(m, 4);
        return (rm == 2 || rm == 3) && is_squarefree(m);
    }
    return false;
}

QuadField field_from_discriminant(std::int64_t d, long prec)
{
    if (d >= 0)
        throw Error(ErrorCode::NotImaginary, "discriminant must be negative, got " + std::to_string(d));
    if (d == -3 || d == -4)
        throw Error(ErrorCode::ExcludedField, "Q(sqrt(-1)) and Q(sqrt(-3)) are excluded");
    if (!is_fundamental_discriminant(d))
        throw Error(ErrorCode::NotFundamental, std::to_string(d) + " is not a fundamental discriminant");

    Real root = sqrt(Real(-d, prec));
    if (floor_mod(d, 4) == 1)
        return {d, 1, (1 - d) / 4, BigComplex(Real(Rational(-1, 2), prec), root / 2)};
    return {d, 0, -d / 4, BigComplex(Real(0L, prec), root / 2)};
}

BigComplex QuadField::tau_at(long prec) const
{
    return QuadForm{1, b, c}.root(prec);
}

BigComplex QuadForm::root(long prec) const
{
    Real two_a(2 * a, prec);
    return {Real(-b, prec) / two_a, sqrt(Real(-discriminant(), prec)) / two_a};
}

std::string QuadForm::to_string() const
{
    return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
}

std::vector<QuadForm> reduced_forms(std::int64_t d)
{
    if (d >= 0 || floor_mod(d, 4) > 1)
        throw Error(ErrorCode::InvalidArgument, std::to_string(d) + " is not a negative discriminant");
    std::vector<QuadForm> forms;
    // A <= sqrt(|d|/3) for reduced forms.
    for (std::int64_t a = 1; 3 * a * a <= -d; ++a) {
        for (std::int64_t b = -a + 1; b <= a; ++b) {
            std::int64_t num = b * b - d;
            if (num % (4 * a) != 0)
                continue;
            std::int64_t c = num / (4 * a);
            if (c < a)
                continue;
            if (c == a && b < 0)
                continue;
            if (std::gcd(std::gcd(a, b), c) != 1)
                continue;
            forms.push_back({a, b, c});
        }
    }
    return forms;
}

std::int64_t class_number(std::int64_t d)
{
    return static_cast<std::int64_t>(reduced_forms(d).size());
}

std::vector<WnkElement> wnk_elements(QuadField const & k, std::int64_t level)
{
    if (level < 2)
        throw Error(ErrorCode::InvalidArgument, "level must be at least 2");
    std::vector<WnkElement> out;
    std::set<std::array<std::int64_t, 4>> seen;
    for (std::int64_t t = 0; t < level; ++t) {
        for (std::int64_t s = 0; s < level; ++s) {
            std::int64_t det = t * t - k.b * s * t + k.c * s * s;
            if (!is_unit_mod(det, level))
                continue;
            GLMatrix m(t - k.b * s, -k.c * s, s, t, level);
            if (seen.insert(m.class_key()).second)
                out.push_back({t, s, m});
        }
    }
    return out;
}

std::vector<GLMatrix> wnk_group(QuadField const & k, std::int64_t level)
{
    std::vector<GLMatrix> out;
    for (auto const & e : wnk_elements(k, level))
        out.push_back(e.matrix);
    return out;
}

GLMatrix element_to_matrix(QuadField const & k, std::int64_t s, std::int64_t t, std::int64_t level)
{
    std::int64_t det = t * t - k.b * s * t + k.c * s * s;
    if (!is_unit_mod(det, level))
        throw Error(ErrorCode::NotCoprime, std::to_string(s) + "*tau_K + " + std::to_string(t)
                                               + " is not prime to " + std::to_string(level));
    return {t - k.b * s, -k.c * s, s, t, level};
}

GLMatrix form_class_matrix(QuadField const & k, QuadForm const & form, std::int64_t level)
{
    if (form.discriminant() != k.discriminant)
        throw Error(ErrorCode::InvalidArgument, "form " + form.to_string() + " has the wrong discriminant");
    std::array<std::int64_t, 4> entries{0, 0, 0, 0};
    std::int64_t modulus = 1;
    for (auto const & [p, pe] : prime_power_factors(level)) {
        std::array<std::int64_t, 4> local;
        if (form.a % p != 0)
            local = {form.a, (form.b - k.b) / 2, 0, 1};
        else if (form.c % p != 0)
            local = {(-form.b - k.b) / 2, -form.c, 1, 0};
        else
            local = {(-form.b - k.b) / 2 - form.a, (-form.b + k.b) / 2 - form.c, 1, -1};

        // CRT: x = entries mod modulus, x = local mod pe.
        std::int64_t inv = inverse_mod(modulus % pe, pe);
        for (std::size_t i = 0; i < 4; ++i) {
            std::int64_t diff = floor_mod(local[i] - entries[i], pe);
            entries[i] = entries[i] + modulus * floor_mod(diff * inv, pe);
        }
        modulus *= pe;
    }
    return {entries[0], entries[1], entries[2], entries[3], level};
}

} // namespace cmunits
