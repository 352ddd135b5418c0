#include "cmunits/galois.hpp"

#include <algorithm>
#include <numeric>

#include "cmunits/error.hpp"
#include "cmunits/invariants.hpp"

namespace cmunits
{

namespace
{

std::int64_t floor_div(std::int64_t a, std::int64_t b)
{
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0)))
        --q;
    return q;
}

std::int64_t floor_rational(Rational const & x)
{
    return floor_div(x.numerator(), x.denominator());
}

// ((x)) sawtooth: 0 at integers, x - floor(x) - 1/2 otherwise.
Rational sawtooth(Rational const & x)
{
    if (x.denominator() == 1)
        return Rational(0);
    return x - Rational(floor_rational(x)) - Rational(1, 2);
}

// Turns of prod e^{pi i v2 (1 - v1) m} over the factors.
Rational representative_turns(std::vector<std::pair<IndexVector, std::int64_t>> const & factors)
{
    Rational turns(0);
    for (auto const & [v, m] : factors)
        turns += v.v2() * (Rational(1) - v.v1()) * Rational(m) / Rational(2);
    return turns;
}

} // namespace

ModularUnitExpr::ModularUnitExpr(UnityRoot prefactor, std::vector<std::pair<IndexVector, std::int64_t>> factors,
                                 std::int64_t level)
    : prefactor_(prefactor), level_(level)
{
    if (level < 2)
        throw Error(ErrorCode::InvalidArgument, "expression level must be at least 2");
    std::vector<std::pair<IndexVector, std::int64_t>> merged;
    for (auto const & [v, m] : factors) {
        if (v.level() != level)
            throw Error(ErrorCode::InvalidArgument, "vector " + v.to_string() + " is not of level " + std::to_string(level));
        auto it = std::find_if(merged.begin(), merged.end(), [&](auto const & f) { return f.first == v; });
        if (it == merged.end())
            merged.emplace_back(v, m);
        else
            it->second += m;
    }
    std::erase_if(merged, [](auto const & f) { return f.second == 0; });
    factors_ = std::move(merged);
    raw_ = !modularity_check(factors_, level_).in_level;
}

BigComplex ModularUnitExpr::evaluate(BigComplex const & tau, EvalConfig const & cfg) const
{
    long prec = cfg.working_precision();
    BigComplex result = prefactor_.value(prec);
    for (auto const & [v, m] : factors_)
        result *= pow(siegel(v, tau, cfg), m);
    return result;
}

std::string ModularUnitExpr::to_string() const
{
    std::string out = prefactor_.is_one() ? "" : prefactor_.to_string();
    for (auto const & [v, m] : factors_)
        out += (out.empty() ? "" : " * ") + ("g[" + v.to_string() + "]^" + std::to_string(m));
    return out.empty() ? "1" : out;
}

ModularUnitExpr siegel12n_expression(std::int64_t level)
{
    return {UnityRoot(), {{IndexVector(0, 1, level), 12 * level}}, level};
}

ModularUnitExpr quotient_expression(std::int64_t level)
{
    if (level < 2 || level % 2 != 0)
        throw Error(ErrorCode::InvalidArgument, "the quotient expression needs an even level");
    std::int64_t e = quotient_exponent(level);
    return {quotient_root_of_unity(level),
            {{IndexVector(level / 2, level / 2 + 1, level), e}, {IndexVector(0, 1, level), -e}},
            level};
}

Rational dedekind_sum(std::int64_t d, std::int64_t c)
{
    if (c <= 0)
        throw Error(ErrorCode::InvalidArgument, "Dedekind sum needs c > 0");
    Rational s(0);
    for (std::int64_t k = 1; k < c; ++k)
        s += sawtooth(Rational(k, c)) * sawtooth(Rational(d * k, c));
    return s;
}

Rational siegel_sl2_multiplier(IntMatrix const & m)
{
    if (m.det() != 1)
        throw Error(ErrorCode::InvalidArgument, "multiplier needs a matrix of determinant 1");
    // Klein forms carry no root of unity under SL2(Z); all of it comes
    // from eta^2, plus a sign when passing through -M.
    if (m.c < 0)
        return siegel_sl2_multiplier({-m.a, -m.b, -m.c, -m.d}) + Rational(1, 2);
    if (m.c == 0)
        return m.d == 1 ? Rational(m.b, 12) : Rational(-m.b, 12) + Rational(1, 2);
    return Rational(m.a + m.d, 12 * m.c) - dedekind_sum(m.d, m.c) - Rational(1, 4);
}

Rational siegel_shift_multiplier(Rational const & v1, Rational const & v2, std::int64_t w1, std::int64_t w2)
{
    return Rational(w1 * w2 + w1 + w2, 2) - (Rational(w1) * v2 - Rational(w2) * v1) / Rational(2);
}

ModularUnitExpr act(GLMatrix const & gamma, ModularUnitExpr const & e)
{
    std::int64_t n = e.level();
    if (gamma.level() != n)
        throw Error(ErrorCode::InvalidArgument, "matrix and expression levels differ");
    std::int64_t det = gamma.det();
    if (e.raw() && det != 1 % n)
        throw Error(ErrorCode::UnsupportedExpr, "raw expression " + e.to_string() + " admits only SL2 matrices");

    // gamma = gamma1 diag(1, det), gamma1 in SL2(Z/N).
    GLMatrix gamma1 = gamma * GLMatrix(1, 0, 0, inverse_mod(det, n), n);
    IntMatrix lift = gamma1.lift_sl2();
    Rational mu = siegel_sl2_multiplier(lift);

    Rational turns = e.prefactor().turns();
    std::vector<std::pair<IndexVector, std::int64_t>> moved;
    for (auto const & [v, m] : e.factors()) {
        Rational u1 = v.v1() * Rational(lift.a) + v.v2() * Rational(lift.c);
        Rational u2 = v.v1() * Rational(lift.b) + v.v2() * Rational(lift.d);
        std::int64_t w1 = floor_rational(u1), w2 = floor_rational(u2);
        Rational r1 = u1 - Rational(w1), r2 = u2 - Rational(w2);
        // g_v(M tau) = mu g_u(tau) = mu eps g_r(tau)
        turns += Rational(m) * (mu + siegel_shift_multiplier(r1, r2, w1, w2));
        moved.emplace_back(IndexVector((r1 * Rational(n)).numerator(), (r2 * Rational(n)).numerator(), n), m);
    }
    if (det == 1 % n)
        return {UnityRoot::from_turns(turns), moved, n};

    // zeta_N -> zeta_N^det on coefficients. The normalized product
    // prod (e^{pi i v2 (1 - v1)} g_v)^m has coefficients in Q(zeta_N) and
    // depends on v2 only mod 1; the leftover constant must lie in Q(zeta_N).
    Rational constant = turns - representative_turns(moved);
    std::int64_t order = std::lcm<std::int64_t>(2, n);
    Rational scaled = constant * Rational(order);
    if (scaled.denominator() != 1)
        throw Error(ErrorCode::UnsupportedExpr, "constant of " + e.to_string() + " is not in Q(zeta_N)");
    std::int64_t dt = det;
    if (n % 2 == 1 && dt % 2 == 0)
        dt += n; // fixes -1 while still acting as det on zeta_N
    std::vector<std::pair<IndexVector, std::int64_t>> twisted;
    for (auto const & [v, m] : moved)
        twisted.emplace_back(IndexVector(v.a(), dt * v.b(), n), m);
    Rational new_turns = constant * Rational(dt) + representative_turns(twisted);
    return {UnityRoot::from_turns(new_turns), twisted, n};
}

std::vector<Conjugate> conjugates_over_hk(ModularUnitExpr const & e, QuadField const & k, EvalConfig const & cfg)
{
    std::int64_t n = e.level();
    BigComplex tau = k.tau_at(cfg.working_precision());
    std::vector<Conjugate> out;
    for (auto const & alpha : wnk_group(k, n)) {
        ModularUnitExpr moved = act(alpha, e);
        BigComplex value = moved.evaluate(tau, cfg);
        out.push_back({alpha, std::nullopt, alpha, moved, tau, value});
    }
    return out;
}

std::vector<Conjugate> conjugates_over_k(ModularUnitExpr const & e, QuadField const & k, EvalConfig const & cfg)
{
    std::int64_t n = e.level();
    long prec = cfg.working_precision();
    auto group = wnk_group(k, n);
    std::vector<Conjugate> out;
    for (auto const & form : reduced_forms(k.discriminant)) {
        GLMatrix mq = form_class_matrix(k, form, n);
        BigComplex point = form.root(prec);
        for (auto const & alpha : group) {
            ModularUnitExpr moved = act(mq, act(alpha, e));
            BigComplex value = moved.evaluate(point, cfg);
            out.push_back({alpha, form, alpha * mq, moved, point, value});
        }
    }
    return out;
}

std::vector<BigComplex> conjugate_values(std::vector<Conjugate> const & conjugates)
{
    std::vector<BigComplex> out;
    out.reserve(conjugates.size());
    for (auto const & c : conjugates)
        out.push_back(c.value);
    return out;
}

} // namespace cmunits
