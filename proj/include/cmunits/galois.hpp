#ifndef CMUNITS_GALOIS_HPP
#define CMUNITS_GALOIS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cmunits/cm_fields.hpp"
#include "cmunits/fricke_family.hpp"
#include "cmunits/unity_root.hpp"

namespace cmunits
{

/*
 * zeta * prod_v g_v^{m(v)} with v kept as the Z^2-reduced representative
 * (0 <= a, b < N). The prefactor is exact. A raw expression skipped the
 * level check; only SL2 matrices may act on it.
 */
class ModularUnitExpr
{
    UnityRoot prefactor_;
    std::vector<std::pair<IndexVector, std::int64_t>> factors_;
    std::int64_t level_ = 2;
    bool raw_ = false;

public:
    // Merges repeated vectors and drops zero exponents. Marks the result
    // raw when modularity_check fails.
    ModularUnitExpr(UnityRoot prefactor, std::vector<std::pair<IndexVector, std::int64_t>> factors,
                    std::int64_t level);

    UnityRoot const & prefactor() const { return prefactor_; }
    std::vector<std::pair<IndexVector, std::int64_t>> const & factors() const { return factors_; }
    std::int64_t level() const { return level_; }
    bool raw() const { return raw_; }

    BigComplex evaluate(BigComplex const & tau, EvalConfig const & cfg) const;
    std::string to_string() const; // "zeta_8^7 * g[1/2,3/4]^2 * g[0,1/4]^-2"

    friend bool operator==(ModularUnitExpr const &, ModularUnitExpr const &) = default;
};

// g_{(0,1/N)}^{12N}.
ModularUnitExpr siegel12n_expression(std::int64_t level);
// zeta_{2N}^{-4/gcd(4,N)} (g_{(1/2,1/2+1/N)} / g_{(0,1/N)})^{8/gcd(4,N)}; N even.
ModularUnitExpr quotient_expression(std::int64_t level);

// Turns of the root of unity mu(M) with g_v(M tau) = mu(M) g_{vM}(tau),
// for M in SL2(Z) and any rational v (vM unreduced).
Rational siegel_sl2_multiplier(IntMatrix const & m);
// Turns of eps with g_{v+w} = eps g_v for w in Z^2.
Rational siegel_shift_multiplier(Rational const & v1, Rational const & v2, std::int64_t w1, std::int64_t w2);
// Dedekind sum s(d, c) for c > 0.
Rational dedekind_sum(std::int64_t d, std::int64_t c);

/*
 * Right action e -> e^gamma of GL2(Z/N) on level-N expressions, so that
 * e^{gamma delta} = (e^gamma)^delta. gamma = gamma1 diag(1, det gamma):
 * the SL2 part acts by composition with a lift, the diagonal part by
 * zeta_N -> zeta_N^det on Fourier coefficients.
 * Throws UnsupportedExpr for raw expressions when det gamma != 1.
 */
ModularUnitExpr act(GLMatrix const & gamma, ModularUnitExpr const & e);

struct Conjugate
{
    GLMatrix alpha;                // element of W_{N,K}
    std::optional<QuadForm> form;  // reduced form, for conjugates over K
    GLMatrix matrix;               // total matrix applied to the expression
    ModularUnitExpr expr;          // transported expression
    BigComplex point;              // evaluation point
    BigComplex value;
};

// e^alpha(tau_K) for alpha in W_{N,K}/+-.
std::vector<Conjugate> conjugates_over_hk(ModularUnitExpr const & e, QuadField const & k, EvalConfig const & cfg);
// e^{alpha M_Q}(tau_Q) for every reduced form Q and alpha in W_{N,K}/+-,
// forms outer, alpha inner.
std::vector<Conjugate> conjugates_over_k(ModularUnitExpr const & e, QuadField const & k, EvalConfig const & cfg);

std::vector<BigComplex> conjugate_values(std::vector<Conjugate> const & conjugates);

} // namespace cmunits

#endif
