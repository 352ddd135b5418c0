#include "cmunits/invariants.hpp"

#include <numeric>

#include "cmunits/error.hpp"
#include "cmunits/modular_functions.hpp"

namespace cmunits
{

namespace
{

IndexVector base_vector(std::int64_t level)
{
    return {0, 1, level};
}

IndexVector half_vector(std::int64_t level)
{
    return {level / 2, level / 2 + 1, level};
}

} // namespace

std::string_view to_string(InvariantKind kind)
{
    switch (kind) {
    case InvariantKind::fricke: return "fricke";
    case InvariantKind::siegel12n: return "siegel12N";
    case InvariantKind::quotient: return "quotient";
    }
    return "unknown";
}

SmallExponentHypotheses small_exponent_hypotheses(std::int64_t discriminant, std::int64_t level)
{
    SmallExponentHypotheses h;
    h.level_even_at_least_4 = level >= 4 && level % 2 == 0;
    h.discriminant_divisible_by_4 = floor_mod(discriminant, 4) == 0;
    // |d| >= 4 N^{4/3}  <=>  |d|^3 >= 64 N^4, compared exactly.
    mpz_class d = -discriminant;
    mpz_class n = level;
    h.discriminant_large = d * d * d >= 64 * n * n * n * n;
    return h;
}

BigComplex siegel_ramachandra(QuadField const & k, std::int64_t level, GLMatrix const & alpha, EvalConfig const & cfg)
{
    IndexVector v = transpose_apply(alpha, base_vector(level));
    return pow(siegel(v, k.tau_at(cfg.working_precision()), cfg), 12 * level);
}

BigComplex fricke_invariant(QuadField const & k, std::int64_t level, GLMatrix const & alpha, EvalConfig const & cfg)
{
    IndexVector v = transpose_apply(alpha, base_vector(level));
    return fricke(v, k.tau_at(cfg.working_precision()), cfg);
}

UnityRoot quotient_root_of_unity(std::int64_t level)
{
    return UnityRoot(-4 / std::gcd<std::int64_t>(4, level), 2 * level);
}

std::int64_t quotient_exponent(std::int64_t level)
{
    return 8 / std::gcd<std::int64_t>(4, level);
}

InvariantReport quotient_invariant(QuadField const & k, std::int64_t level, EvalConfig const & cfg)
{
    if (level < 2 || level % 2 != 0)
        throw Error(ErrorCode::InvalidArgument, "the quotient invariant needs an even level, got " + std::to_string(level));

    InvariantReport report{BigComplex(cfg.working_precision()), InvariantKind::quotient, k, level, std::nullopt,
                           small_exponent_hypotheses(k.discriminant, level), {}};
    if (!report.hypotheses.level_even_at_least_4)
        report.warnings.push_back("hypothesis N >= 4 even fails");
    if (!report.hypotheses.discriminant_divisible_by_4)
        report.warnings.push_back("hypothesis d_K = 0 mod 4 fails");
    if (!report.hypotheses.discriminant_large)
        report.warnings.push_back("hypothesis |d_K| >= 4 N^(4/3) fails");

    try {
        report.class_matrix = element_to_matrix(k, level / 2, level / 2 + 1, level);
    } catch (Error const & e) {
        report.warnings.push_back(std::string("class matrix undefined: ") + e.what());
    }

    long prec = cfg.working_precision();
    BigComplex tau = k.tau_at(prec);
    BigComplex ratio = siegel(half_vector(level), tau, cfg) / siegel(base_vector(level), tau, cfg);
    report.value = quotient_root_of_unity(level).value(prec) * pow(ratio, quotient_exponent(level));
    return report;
}

BigComplex discriminant_of_values(std::vector<BigComplex> const & values)
{
    long prec = values.empty() ? 64 : values.front().precision();
    BigComplex prod(1, 0, prec);
    for (std::size_t i = 0; i < values.size(); ++i) {
        for (std::size_t j = i + 1; j < values.size(); ++j) {
            BigComplex diff = values[i] - values[j];
            prod *= diff * diff;
        }
    }
    return prod;
}

BigComplex eval_dn(QuadField const & k, std::int64_t level, EvalConfig const & cfg)
{
    BigComplex tau = k.tau_at(cfg.working_precision());
    std::vector<BigComplex> values;
    for (auto const & cls : enumerate_vn_classes(level))
        values.push_back(pow(siegel(cls.vector(), tau, cfg), 12 * level));
    return discriminant_of_values(values);
}

MagnitudeReport check_magnitude_bounds(QuadField const & k, std::int64_t level, EvalConfig const & cfg)
{
    if (level < 2 || level % 2 != 0)
        throw Error(ErrorCode::InvalidArgument, "magnitude bounds need an even level");
    auto classes = enumerate_vn_classes(level);
    CanonicalVector low = canonicalize(base_vector(level));
    CanonicalVector high = canonicalize(half_vector(level));

    BigComplex tau = k.tau_at(cfg.working_precision());
    std::vector<MagnitudeEntry> entries;
    for (auto const & cls : classes)
        entries.push_back({cls, log(siegel(cls.vector(), tau, cfg).abs())});

    Real log_low(cfg.working_precision()), log_high(cfg.working_precision());
    std::size_t imin = 0, imax = 0;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (entries[i].vector == low)
            log_low = entries[i].log_abs;
        if (entries[i].vector == high)
            log_high = entries[i].log_abs;
        if (entries[i].log_abs < entries[imin].log_abs)
            imin = i;
        if (entries[i].log_abs > entries[imax].log_abs)
            imax = i;
    }

    std::optional<Real> margin_lower, margin_upper;
    for (auto const & e : entries) {
        if (e.vector != low) {
            Real m = e.log_abs - log_low;
            margin_lower = margin_lower ? min(*margin_lower, m) : m;
        }
        if (e.vector != high) {
            Real m = log_high - e.log_abs;
            margin_upper = margin_upper ? min(*margin_upper, m) : m;
        }
    }
    Real zero(0L, cfg.working_precision());
    Real lower = margin_lower.value_or(zero);
    Real upper = margin_upper.value_or(zero);
    return {small_exponent_hypotheses(k.discriminant, level),
            std::move(entries),
            classes[imin],
            classes[imax],
            lower,
            upper,
            lower.sign() > 0,
            upper.sign() >= 0};
}

CorollaryBound corollary_bound(QuadField const & k, std::int64_t level)
{
    std::int64_t h = class_number(k.discriminant);
    auto ell = static_cast<std::int64_t>(enumerate_vn_classes(level).size());
    std::int64_t bound = level * ell * (ell - 1) / 2;
    return {h, ell, bound, h > bound};
}

} // namespace cmunits
