#include "cmunits/modular_functions.hpp"

#include <cmath>
#include <numeric>
#include <vector>

#include "cmunits/error.hpp"

namespace cmunits
{

std::int64_t floor_mod(std::int64_t a, std::int64_t m)
{
    std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

std::int64_t gcd3(std::int64_t a, std::int64_t b, std::int64_t c)
{
    return std::gcd(std::gcd(a, b), c);
}

IndexVector::IndexVector(std::int64_t a, std::int64_t b, std::int64_t level)
{
    if (level < 1)
        throw Error(ErrorCode::InvalidArgument, "level must be positive, got " + std::to_string(level));
    a_ = floor_mod(a, level);
    b_ = floor_mod(b, level);
    n_ = level;
    // Level 1 leaves only the zero vector.
    if (a_ == 0 && b_ == 0)
        throw Error(ErrorCode::ZeroVector, "vector is zero modulo Z^2");
    if (gcd3(a_, b_, n_) != 1)
        throw Error(ErrorCode::InvalidArgument,
                    "(" + std::to_string(a) + "/" + std::to_string(level) + ", " + std::to_string(b) + "/"
                        + std::to_string(level) + ") does not have primitive denominator " + std::to_string(level));
}

std::string IndexVector::to_string() const
{
    return std::to_string(a_) + "/" + std::to_string(n_) + "," + std::to_string(b_) + "/" + std::to_string(n_);
}

Rational bernoulli2(Rational const & x)
{
    return x * x - x + Rational(1, 6);
}

Rational fractional_part(Rational const & x)
{
    std::int64_t whole = x.numerator() / x.denominator();
    if (x.numerator() < 0 && x.numerator() % x.denominator() != 0)
        --whole;
    return x - Rational(whole);
}

namespace
{

struct Nome
{
    BigComplex tau;
    BigComplex q;
    Real abs_q;
    long prec;
};

Nome make_nome(BigComplex const & tau, EvalConfig const & cfg)
{
    cfg.validate();
    require_upper_half_plane(tau);
    long prec = cfg.working_precision();
    BigComplex t = tau.with_precision(prec);
    BigComplex q = nome(t, cfg);
    Real aq = q.abs();
    return {std::move(t), std::move(q), std::move(aq), prec};
}

BigComplex one(long prec) { return BigComplex(1, 0, prec); }

// Bits lost to cancellation in g2^3 - 27 g3^2: |g2^3| / |Delta| ~ 1/|q|.
long delta_extra_bits(BigComplex const & tau)
{
    double y = tau.imag().to_double();
    double bits = 2.0 * M_PI * y / M_LN2;
    return static_cast<long>(std::ceil(std::max(bits, 0.0))) + 16;
}

// sigma_k(n) for 1 <= n <= count.
std::vector<Real> divisor_sums(long count, int k, long prec)
{
    std::vector<mpz_class> sums(static_cast<std::size_t>(count) + 1, 0);
    for (long d = 1; d <= count; ++d) {
        mpz_class dk;
        mpz_ui_pow_ui(dk.get_mpz_t(), static_cast<unsigned long>(d), static_cast<unsigned long>(k));
        for (long m = d; m <= count; m += d)
            sums[static_cast<std::size_t>(m)] += dk;
    }
    std::vector<Real> out;
    out.reserve(sums.size());
    for (auto const & s : sums)
        out.emplace_back(s, prec);
    return out;
}

// 1 + coeff * sum sigma_k(n) q^n.
BigComplex eisenstein_series(Nome const & nm, EvalConfig const & cfg, int k, long coeff)
{
    long terms = series_truncation_length(nm.abs_q, cfg, k);
    auto sigma = divisor_sums(terms, k, nm.prec);
    BigComplex sum(nm.prec);
    BigComplex qn = nm.q;
    for (long n = 1; n <= terms; ++n) {
        sum += qn * sigma[static_cast<std::size_t>(n)];
        qn *= nm.q;
    }
    return one(nm.prec) + sum * coeff;
}

EvalConfig with_extra_guard(EvalConfig cfg, long extra)
{
    cfg.guard_bits += extra;
    // guard_bits < precision_bits is a user-facing constraint; internal
    // widening keeps the ratio by growing both.
    if (cfg.guard_bits >= cfg.precision_bits)
        cfg.precision_bits = cfg.guard_bits + 1;
    return cfg;
}

struct Weierstrass
{
    BigComplex g2;
    BigComplex g3;
    BigComplex delta;
};

// g2, g3 and Delta at the widened precision.
Weierstrass weierstrass_invariants(BigComplex const & tau, EvalConfig const & cfg)
{
    require_upper_half_plane(tau);
    EvalConfig wide = with_extra_guard(cfg, delta_extra_bits(tau));
    Nome nm = make_nome(tau, wide);
    Real pi = Real::pi(nm.prec);
    Real pi2 = pi * pi;
    Real pi4 = pi2 * pi2;
    Real pi6 = pi4 * pi2;
    BigComplex g2 = eisenstein_series(nm, wide, 3, 240) * (pi4 * 4 / 3);
    BigComplex g3 = eisenstein_series(nm, wide, 5, -504) * (pi6 * 8 / 27);
    BigComplex d = g2 * g2 * g2 - g3 * g3 * 27;
    return {std::move(g2), std::move(g3), std::move(d)};
}

} // namespace

BigComplex dedekind_eta(BigComplex const & tau, EvalConfig const & cfg)
{
    Nome nm = make_nome(tau, cfg);
    long terms = series_truncation_length(nm.abs_q, cfg);
    BigComplex prod = one(nm.prec);
    BigComplex qn = nm.q;
    for (long n = 1; n <= terms; ++n) {
        prod *= one(nm.prec) - qn;
        qn *= nm.q;
    }
    Real root_two_pi = sqrt(Real::pi(nm.prec) * 2);
    BigComplex zeta8 = unit_root(Rational(1, 8), nm.prec);
    return zeta8 * fractional_q_power(nm.tau, Rational(1, 24), cfg) * prod * root_two_pi;
}

BigComplex siegel_at(Rational const & v1, Rational const & v2, BigComplex const & tau, EvalConfig const & cfg)
{
    if (v1.denominator() == 1 && v2.denominator() == 1)
        throw Error(ErrorCode::ZeroVector, "Siegel function index is in Z^2");
    Nome nm = make_nome(tau, cfg);
    long prec = nm.prec;

    // u = q^{v1} e^{2 pi i v2} = e^{2 pi i (v1 tau + v2)}
    BigComplex u = fractional_q_power(nm.tau, v1, cfg) * unit_root(v2, prec);
    BigComplex u_inv = fractional_q_power(nm.tau, -v1, cfg) * unit_root(-v2, prec);

    // Factors with exponent n + v1 or n - v1 are small once n exceeds |v1|
    // by the plain truncation length.
    double shift = std::ceil(std::abs(boost::rational_cast<double>(v1)));
    long terms = series_truncation_length(nm.abs_q, cfg) + static_cast<long>(shift) + 1;

    BigComplex prod = one(prec) - u;
    BigComplex qn = nm.q;
    for (long n = 1; n <= terms; ++n) {
        prod *= (one(prec) - qn * u) * (one(prec) - qn * u_inv);
        qn *= nm.q;
    }
    BigComplex lead = unit_root(v2 * (v1 - Rational(1)) / Rational(2), prec)
        * fractional_q_power(nm.tau, bernoulli2(v1) / Rational(2), cfg);
    return -(lead * prod);
}

BigComplex siegel(IndexVector const & v, BigComplex const & tau, EvalConfig const & cfg)
{
    return siegel_at(v.v1(), v.v2(), tau, cfg);
}

Rational siegel_q_order(IndexVector const & v)
{
    return bernoulli2(fractional_part(v.v1())) / Rational(2);
}

BigComplex eisenstein_g2(BigComplex const & tau, EvalConfig const & cfg)
{
    Nome nm = make_nome(tau, cfg);
    Real pi2 = Real::pi(nm.prec) * Real::pi(nm.prec);
    return eisenstein_series(nm, cfg, 3, 240) * (pi2 * pi2 * 4 / 3);
}

BigComplex eisenstein_g3(BigComplex const & tau, EvalConfig const & cfg)
{
    Nome nm = make_nome(tau, cfg);
    Real pi2 = Real::pi(nm.prec) * Real::pi(nm.prec);
    return eisenstein_series(nm, cfg, 5, -504) * (pi2 * pi2 * pi2 * 8 / 27);
}

BigComplex delta(BigComplex const & tau, EvalConfig const & cfg)
{
    return weierstrass_invariants(tau, cfg).delta.with_precision(cfg.working_precision());
}

BigComplex j_invariant(BigComplex const & tau, EvalConfig const & cfg)
{
    Weierstrass w = weierstrass_invariants(tau, cfg);
    BigComplex j = w.g2 * w.g2 * w.g2 * 1728 / w.delta;
    return j.with_precision(cfg.working_precision());
}

BigComplex wp(IndexVector const & v, BigComplex const & tau, EvalConfig const & cfg)
{
    Nome nm = make_nome(tau, cfg);
    long prec = nm.prec;

    // wp is even and Z^2-periodic in v; take the representative with
    // 0 <= v1 <= 1/2 so every q^n u^{+-1} decays.
    std::int64_t a = v.a();
    std::int64_t b = v.b();
    if (2 * a > v.level()) {
        a = v.level() - a;
        b = floor_mod(-b, v.level());
    }
    Rational v1(a, v.level());
    Rational v2(b, v.level());

    BigComplex u = fractional_q_power(nm.tau, v1, cfg) * unit_root(v2, prec);
    BigComplex u_inv = fractional_q_power(nm.tau, -v1, cfg) * unit_root(-v2, prec);
    auto term = [&](BigComplex const & x) {
        BigComplex d = one(prec) - x;
        return x / (d * d);
    };

    long terms = series_truncation_length(nm.abs_q, cfg, 1) + 1;
    BigComplex sum = BigComplex(Real(Rational(1, 12), prec), Real(0L, prec)) + term(u);
    BigComplex qn = nm.q;
    for (long n = 1; n <= terms; ++n) {
        sum += term(qn * u) + term(qn * u_inv) - term(qn) * 2;
        qn *= nm.q;
    }
    // (2 pi i)^2 = -4 pi^2
    Real pi = Real::pi(prec);
    return sum * (-(pi * pi * 4));
}

namespace
{

// S(0), ..., S(radius): partial sums of the lattice series over square
// annuli, accumulated in one pass.
std::vector<BigComplex> lattice_partial_sums(IndexVector const & v, BigComplex const & tau, long radius)
{
    require_upper_half_plane(tau);
    if (radius < 1)
        throw Error(ErrorCode::InvalidArgument, "lattice radius must be positive");
    long prec = tau.precision();
    BigComplex z = tau * Real(v.v1(), prec) + BigComplex(Real(v.v2(), prec), Real(0L, prec));
    if (z.is_zero())
        throw Error(ErrorCode::PoleAtLatticePoint, "z lies on the lattice");

    BigComplex one_c = one(prec);
    BigComplex sum = one_c / (z * z);
    // For w != 0: 1/(z - w)^2 - 1/w^2 = z (2w - z) / (w^2 (z - w)^2).
    auto summand = [&](long m, long n) {
        BigComplex w = tau * m + BigComplex(Real(n, prec), Real(0L, prec));
        BigComplex d = z - w;
        return z * (w * 2 - z) / (w * w * d * d);
    };
    std::vector<BigComplex> partial{sum};
    partial.reserve(static_cast<std::size_t>(radius) + 1);
    for (long r = 1; r <= radius; ++r) {
        BigComplex annulus(prec);
        for (long k = -r; k <= r; ++k) {
            annulus += summand(r, k);
            annulus += summand(-r, k);
        }
        for (long k = -r + 1; k <= r - 1; ++k) {
            annulus += summand(k, r);
            annulus += summand(k, -r);
        }
        sum += annulus;
        partial.push_back(sum);
    }
    return partial;
}

} // namespace

BigComplex wp_lattice_oracle(IndexVector const & v, BigComplex const & tau, long radius)
{
    return lattice_partial_sums(v, tau, radius).back();
}

BigComplex wp_lattice_extrapolated(IndexVector const & v, BigComplex const & tau, long radius, int levels)
{
    long step = radius / 10;
    if (levels < 1 || step < 1 || radius - (levels - 1) * step < 1)
        throw Error(ErrorCode::InvalidArgument, "need radius >= 10 and radius - (levels - 1) radius/10 >= 1");
    long prec = tau.precision();
    std::vector<BigComplex> partial = lattice_partial_sums(v, tau, radius);

    // Fit S(R) = L + a_2 h^2 + ... + a_n h^n, h = 1/R, through n = levels
    // radii; Gauss-Jordan on the real design matrix.
    auto n = static_cast<std::size_t>(levels);
    std::vector<std::vector<Real>> m(n, std::vector<Real>(n, Real(0L, prec)));
    std::vector<BigComplex> rhs;
    for (std::size_t i = 0; i < n; ++i) {
        long r = radius - static_cast<long>(i) * step;
        Real h = Real(1L, prec) / Real(r, prec);
        m[i][0] = Real(1L, prec);
        Real p = h * h;
        for (std::size_t k = 1; k < n; ++k) {
            m[i][k] = p;
            p = p * h;
        }
        rhs.push_back(partial[static_cast<std::size_t>(r)]);
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t pivot = c;
        for (std::size_t r = c + 1; r < n; ++r)
            if (abs(m[r][c]) > abs(m[pivot][c]))
                pivot = r;
        std::swap(m[c], m[pivot]);
        std::swap(rhs[c], rhs[pivot]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c)
                continue;
            Real f = m[r][c] / m[c][c];
            for (std::size_t k = c; k < n; ++k)
                m[r][k] = m[r][k] - f * m[c][k];
            rhs[r] = rhs[r] - rhs[c] * f;
        }
    }
    return rhs[0] / m[0][0];
}

BigComplex fricke(IndexVector const & v, BigComplex const & tau, EvalConfig const & cfg)
{
    Weierstrass w = weierstrass_invariants(tau, cfg);
    long prec = cfg.working_precision();
    BigComplex ratio = (w.g2 * w.g3 / w.delta).with_precision(prec);
    return ratio * wp(v, tau, cfg) * (-(128L * 243L));
}

} // namespace cmunits
