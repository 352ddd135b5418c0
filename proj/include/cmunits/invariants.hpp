#ifndef CMUNITS_INVARIANTS_HPP
#define CMUNITS_INVARIANTS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cmunits/cm_fields.hpp"
#include "cmunits/fricke_family.hpp"
#include "cmunits/numerics.hpp"
#include "cmunits/unity_root.hpp"

namespace cmunits
{

enum class InvariantKind
{
    fricke,
    siegel12n,
    quotient,
};

std::string_view to_string(InvariantKind kind);

// Standing assumptions of the small-exponent results for n = N O_K.
struct SmallExponentHypotheses
{
    bool level_even_at_least_4 = false;     // N >= 4, N even
    bool discriminant_divisible_by_4 = false; // d_K = 0 mod 4
    bool discriminant_large = false;          // |d_K| >= 4 N^{4/3}

    bool all() const { return level_even_at_least_4 && discriminant_divisible_by_4 && discriminant_large; }
};

SmallExponentHypotheses small_exponent_hypotheses(std::int64_t discriminant, std::int64_t level);

struct InvariantReport
{
    BigComplex value;
    InvariantKind kind;
    QuadField field;
    std::int64_t level;
    // Class matrix of the ray class the value is attached to; for the
    // quotient this is C = [((N/2) tau_K + N/2 + 1) O_K] when defined.
    std::optional<GLMatrix> class_matrix;
    SmallExponentHypotheses hypotheses;
    std::vector<std::string> warnings;
};

// g_{t alpha (0, 1/N)}(tau_K)^{12N}.
BigComplex siegel_ramachandra(QuadField const & k, std::int64_t level, GLMatrix const & alpha, EvalConfig const & cfg);
// f_{t alpha (0, 1/N)}(tau_K).
BigComplex fricke_invariant(QuadField const & k, std::int64_t level, GLMatrix const & alpha, EvalConfig const & cfg);

// zeta_{2N}^{-4/gcd(4,N)} (g_{(1/2, 1/2+1/N)}(tau_K) / g_{(0, 1/N)}(tau_K))^{8/gcd(4,N)}.
// Requires N even; hypothesis violations are reported as warnings.
InvariantReport quotient_invariant(QuadField const & k, std::int64_t level, EvalConfig const & cfg);
// Root of unity and exponent used by quotient_invariant.
UnityRoot quotient_root_of_unity(std::int64_t level);
std::int64_t quotient_exponent(std::int64_t level);

// prod over pairs of classes v < w of (g_v^{12N} - g_w^{12N})^2 at tau_K.
BigComplex eval_dn(QuadField const & k, std::int64_t level, EvalConfig const & cfg);
// The same product over an explicit list of values (in order).
BigComplex discriminant_of_values(std::vector<BigComplex> const & values);

struct MagnitudeEntry
{
    CanonicalVector vector;
    Real log_abs; // log |g_v(tau_K)|
};

struct MagnitudeReport
{
    SmallExponentHypotheses hypotheses;
    std::vector<MagnitudeEntry> entries;
    CanonicalVector minimizer;
    CanonicalVector maximizer;
    // min over v !~ (0,1/N) of log|g_v| - log|g_(0,1/N)|
    Real margin_lower;
    // min over v !~ (1/2,1/2+1/N) of log|g_(1/2,1/2+1/N)| - log|g_v|
    Real margin_upper;
    bool lower_bound_holds;
    bool upper_bound_holds;
};

// Exhaustive check of |g_(0,1/N)| < |g_v| <= |g_(1/2,1/2+1/N)| at tau_K
// over V_N / ~. Runs even when the hypotheses fail.
MagnitudeReport check_magnitude_bounds(QuadField const & k, std::int64_t level, EvalConfig const & cfg);

struct CorollaryBound
{
    std::int64_t class_number;
    std::int64_t ell;
    std::int64_t bound; // N ell (ell - 1) / 2
    bool satisfied;     // class_number > bound
};

CorollaryBound corollary_bound(QuadField const & k, std::int64_t level);

} // namespace cmunits

#endif
