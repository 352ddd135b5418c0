#include "cmunits/polynomial.hpp"

#include <algorithm>
#include <set>

#include "cmunits/error.hpp"

namespace cmunits
{

namespace
{

bool value_less(BigComplex const & a, BigComplex const & b)
{
    if (a.real() != b.real())
        return a.real() < b.real();
    return a.imag() < b.imag();
}

Real pow2(long e, long prec)
{
    Real r(prec);
    mpfr_set_ui_2exp(r.get(), 1, e, MPFR_RNDN);
    return r;
}

// Dense polynomials over Z/p, ascending, no trailing zeros.
using ModPoly = std::vector<std::int64_t>;

void trim(ModPoly & f)
{
    while (!f.empty() && f.back() == 0)
        f.pop_back();
}

long deg(ModPoly const & f)
{
    return static_cast<long>(f.size()) - 1;
}

std::int64_t inv_mod_p(std::int64_t a, std::int64_t p)
{
    std::int64_t r = 1, e = p - 2;
    a %= p;
    while (e > 0) {
        if (e & 1)
            r = r * a % p;
        a = a * a % p;
        e >>= 1;
    }
    return r;
}

// Quotient and remainder of a by b (b nonzero).
std::pair<ModPoly, ModPoly> divmod(ModPoly a, ModPoly const & b, std::int64_t p)
{
    ModPoly q(std::max<long>(deg(a) - deg(b) + 1, 0), 0);
    std::int64_t lead_inv = inv_mod_p(b.back(), p);
    while (deg(a) >= deg(b)) {
        long shift = deg(a) - deg(b);
        std::int64_t factor = a.back() * lead_inv % p;
        q[shift] = factor;
        for (long i = 0; i <= deg(b); ++i)
            a[shift + i] = ((a[shift + i] - factor * b[i]) % p + p) % p;
        trim(a);
    }
    return {q, a};
}

ModPoly mulmod(ModPoly const & a, ModPoly const & b, ModPoly const & f, std::int64_t p)
{
    if (a.empty() || b.empty())
        return {};
    ModPoly prod(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    trim(prod);
    return divmod(prod, f, p).second;
}

ModPoly powmod(ModPoly base, std::int64_t e, ModPoly const & f, std::int64_t p)
{
    ModPoly result{1};
    base = divmod(base, f, p).second;
    while (e > 0) {
        if (e & 1)
            result = mulmod(result, base, f, p);
        base = mulmod(base, base, f, p);
        e >>= 1;
    }
    return result;
}

ModPoly gcd(ModPoly a, ModPoly b, std::int64_t p)
{
    while (!b.empty()) {
        ModPoly r = divmod(a, b, p).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        std::int64_t inv = inv_mod_p(a.back(), p);
        for (auto & c : a)
            c = c * inv % p;
    }
    return a;
}

ModPoly sub(ModPoly a, ModPoly const & b, std::int64_t p)
{
    if (a.size() < b.size())
        a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i)
        a[i] = ((a[i] - b[i]) % p + p) % p;
    trim(a);
    return a;
}

ModPoly reduce(IntegerPolynomial const & f, std::int64_t p)
{
    ModPoly out;
    mpz_class r;
    for (auto const & c : f.coeffs) {
        mpz_fdiv_r_ui(r.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(p));
        out.push_back(r.get_si());
    }
    trim(out);
    return out;
}

ModPoly derivative(ModPoly const & f, std::int64_t p)
{
    ModPoly out;
    for (std::size_t i = 1; i < f.size(); ++i)
        out.push_back(static_cast<std::int64_t>(i) % p * f[i] % p);
    trim(out);
    return out;
}

// Degrees of the irreducible factors of a squarefree monic f mod p.
std::vector<long> factor_degrees(ModPoly f, std::int64_t p)
{
    std::vector<long> degrees;
    ModPoly x{0, 1};
    ModPoly h = x;
    for (long i = 1; 2 * i <= deg(f); ++i) {
        h = powmod(h, p, f, p);
        ModPoly g = gcd(sub(h, x, p), f, p);
        if (deg(g) > 0) {
            for (long k = 0; k < deg(g) / i; ++k)
                degrees.push_back(i);
            f = divmod(f, g, p).first;
            h = divmod(h, f, p).second;
        }
    }
    if (deg(f) > 0)
        degrees.push_back(deg(f));
    std::sort(degrees.begin(), degrees.end());
    return degrees;
}

mpz_class evaluate(IntegerPolynomial const & f, mpz_class const & x)
{
    mpz_class acc = 0;
    for (auto it = f.coeffs.rbegin(); it != f.coeffs.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

std::optional<mpz_class> integer_root(IntegerPolynomial const & f)
{
    mpz_class c0 = abs(f.constant());
    if (c0 == 0)
        return mpz_class(0);
    if (c0 > mpz_class("1000000000000"))
        return std::nullopt;
    std::int64_t n = c0.get_si();
    for (std::int64_t r = 1; r * r <= n; ++r) {
        if (n % r != 0)
            continue;
        for (std::int64_t cand : {r, -r, n / r, -(n / r)})
            if (evaluate(f, mpz_class(static_cast<long>(cand))) == 0)
                return mpz_class(static_cast<long>(cand));
    }
    return std::nullopt;
}

std::string join(std::vector<long> const & xs, char sep)
{
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i)
            out += sep;
        out += std::to_string(xs[i]);
    }
    return out;
}

} // namespace

std::string IntegerPolynomial::to_string() const
{
    std::string out;
    for (long i = degree(); i >= 0; --i) {
        mpz_class const & c = coeffs[i];
        if (c == 0 && !(i == 0 && out.empty()))
            continue;
        mpz_class mag = abs(c);
        if (out.empty())
            out += c < 0 ? "-" : "";
        else
            out += c < 0 ? " - " : " + ";
        bool unit = mag == 1 && i > 0;
        if (!unit)
            out += mag.get_str();
        if (i > 0)
            out += (unit ? "" : "*") + std::string("X") + (i > 1 ? "^" + std::to_string(i) : "");
    }
    return out;
}

IntegerPolynomial polynomial_from(std::vector<mpz_class> ascending)
{
    while (ascending.size() > 1 && ascending.back() == 0)
        ascending.pop_back();
    if (ascending.empty())
        ascending.push_back(0);
    IntegerPolynomial p;
    p.monic = ascending.back() == 1;
    p.coeffs = std::move(ascending);
    p.residual = Real(0L, 64);
    p.error_bound = Real(0L, 64);
    return p;
}

std::vector<BigComplex> expand_product(std::vector<BigComplex> const & values)
{
    long prec = values.empty() ? Real::min_precision : values.front().precision();
    for (auto const & v : values)
        prec = std::min(prec, v.precision());

    std::vector<BigComplex> sorted = values;
    std::sort(sorted.begin(), sorted.end(), value_less);

    std::vector<BigComplex> c{BigComplex(1, 0, prec)};
    for (auto const & x : sorted) {
        std::vector<BigComplex> next(c.size() + 1, BigComplex(0, 0, prec));
        for (std::size_t i = 0; i < c.size(); ++i) {
            next[i + 1] += c[i];
            next[i] -= x * c[i];
        }
        c = std::move(next);
    }
    return c;
}

IntegerPolynomial minimal_polynomial(std::vector<BigComplex> const & values)
{
    if (values.empty())
        throw Error(ErrorCode::InvalidArgument, "minimal polynomial of an empty set");
    std::vector<BigComplex> c = expand_product(values);
    long prec = c.front().precision();

    IntegerPolynomial p;
    p.residual = Real(0L, prec);
    for (auto const & coeff : c) {
        mpz_class r = coeff.real().round_to_integer();
        Real dist = max(abs(coeff.real() - Real(r, prec)), abs(coeff.imag()));
        p.residual = max(p.residual, dist);
        p.coeffs.push_back(r);
    }
    p.monic = p.coeffs.back() == 1;

    Real growth(1L, prec);
    for (auto const & x : values)
        growth *= x.abs() + Real(1L, prec);
    Real unit = pow2(32 - prec, prec);
    p.error_bound = growth * unit * static_cast<long>(values.size());
    if (p.error_bound >= Real(0.25, prec))
        throw Error(ErrorCode::RoundingFailure, "precision too low for coefficients of this size (error bound "
                                                    + p.error_bound.to_decimal(6) + "); raise the precision");
    if (p.residual >= Real(0.25, prec))
        throw Error(ErrorCode::RoundingFailure, "coefficients are not near integers (residual "
                                                    + p.residual.to_decimal(6) + "); raise the precision");
    return p;
}

OrbitPolynomial orbit_polynomial(std::vector<BigComplex> const & values)
{
    if (values.empty())
        throw Error(ErrorCode::InvalidArgument, "orbit polynomial of an empty set");
    long prec = values.front().precision();
    Real tol = pow2(-prec / 2, prec);

    std::vector<BigComplex> distinct;
    std::vector<std::size_t> counts;
    for (auto const & v : values) {
        std::size_t i = 0;
        while (i < distinct.size() && (v - distinct[i]).abs() >= tol)
            ++i;
        if (i == distinct.size()) {
            distinct.push_back(v);
            counts.push_back(1);
        } else {
            ++counts[i];
        }
    }
    std::size_t mult = counts.front();
    if (!std::all_of(counts.begin(), counts.end(), [&](std::size_t c) { return c == mult; }))
        throw Error(ErrorCode::RoundingFailure, "orbit values do not repeat uniformly");
    return {minimal_polynomial(distinct), values.size(), distinct.size(), mult};
}

bool unit_check(IntegerPolynomial const & p)
{
    return p.monic && p.degree() >= 1 && abs(p.constant()) == 1;
}

std::string_view to_string(Irreducibility verdict)
{
    switch (verdict) {
    case Irreducibility::irreducible: return "irreducible";
    case Irreducibility::reducible: return "reducible";
    case Irreducibility::inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

IrreducibilityResult irreducibility_probe(IntegerPolynomial const & p)
{
    IrreducibilityResult result;
    long n = p.degree();
    if (n < 1 || !p.monic) {
        result.certificate = "needs a monic polynomial of positive degree";
        return result;
    }
    if (n == 1) {
        result.verdict = Irreducibility::irreducible;
        result.certificate = "linear";
        return result;
    }
    if (auto root = integer_root(p)) {
        result.verdict = Irreducibility::reducible;
        result.root = *root;
        result.certificate = "integer root " + root->get_str();
        return result;
    }

    // Proper factor degrees still compatible with every pattern seen.
    std::set<long> possible;
    for (long k = 1; k < n; ++k)
        possible.insert(k);

    for (std::int64_t q = 2; q < 120; ++q) {
        bool prime = true;
        for (std::int64_t r = 2; r * r <= q; ++r)
            prime = prime && q % r != 0;
        if (!prime)
            continue;
        ModPoly f = reduce(p, q);
        if (deg(f) != n || deg(gcd(f, derivative(f, q), q)) != 0)
            continue;
        std::vector<long> degrees = factor_degrees(f, q);
        result.patterns.push_back({q, degrees});

        if (degrees.size() == 1) {
            result.verdict = Irreducibility::irreducible;
            result.certificate = "irreducible mod " + std::to_string(q);
            return result;
        }
        std::set<long> sums{0};
        for (long d : degrees) {
            std::set<long> grown = sums;
            for (long s : sums)
                grown.insert(s + d);
            sums = std::move(grown);
        }
        std::erase_if(possible, [&](long k) { return !sums.contains(k); });
        if (possible.empty()) {
            result.verdict = Irreducibility::irreducible;
            result.certificate = "no proper factor degree is compatible with the patterns";
            for (auto const & pat : result.patterns)
                result.certificate += " " + std::to_string(pat.prime) + ":" + join(pat.degrees, '+');
            return result;
        }
    }
    result.certificate = "patterns allow factor degrees";
    for (long k : possible)
        result.certificate += " " + std::to_string(k);
    return result;
}

} // namespace cmunits
