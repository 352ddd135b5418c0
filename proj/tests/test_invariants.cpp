#include <doctest.h>

#include "cmunits/error.hpp"
#include "cmunits/invariants.hpp"
#include "support.hpp"

using namespace cmunits;
using testing_support::tol;

TEST_CASE("small exponent hypotheses")
{
    CHECK(small_exponent_hypotheses(-40, 4).all());
    auto h = small_exponent_hypotheses(-20, 4);
    CHECK(h.level_even_at_least_4);
    CHECK(h.discriminant_divisible_by_4);
    CHECK_FALSE(h.discriminant_large);
    CHECK_FALSE(small_exponent_hypotheses(-23, 4).discriminant_divisible_by_4);
    CHECK_FALSE(small_exponent_hypotheses(-40, 2).level_even_at_least_4);
    CHECK_FALSE(small_exponent_hypotheses(-84, 3).all());
}

TEST_CASE("quotient invariant")
{
    EvalConfig cfg;
    long prec = cfg.working_precision();
    QuadField k = field_from_discriminant(-40, prec);
    InvariantReport r = quotient_invariant(k, 4, cfg);
    CHECK(r.warnings.empty());
    CHECK(r.value.real().to_double() == doctest::Approx(71.818848608128));
    CHECK(abs(r.value.imag()) < tol(cfg));
    REQUIRE(r.class_matrix.has_value());
    CHECK(*r.class_matrix == GLMatrix(3, -20, 2, 3, 4));
    CHECK(quotient_root_of_unity(4) == UnityRoot(7, 8));
    CHECK(quotient_exponent(4) == 2);
    CHECK(quotient_exponent(6) == 4);

    // x^{6N} = (g_(1/2,3/4) / g_(0,1/4))^{12N}, and both are Siegel-Ramachandra values.
    BigComplex lhs = pow(r.value, 24);
    BigComplex ratio = siegel_ramachandra(k, 4, *r.class_matrix, cfg) / siegel_ramachandra(k, 4, GLMatrix::identity(4), cfg);
    CHECK(relative_error(lhs, ratio) < tol(cfg, 32));

    InvariantReport weak = quotient_invariant(field_from_discriminant(-20, prec), 4, cfg);
    CHECK_FALSE(weak.warnings.empty());
    CHECK_THROWS_AS(quotient_invariant(k, 3, cfg), Error);
}

TEST_CASE("fricke invariant is the fricke function at tau_K")
{
    EvalConfig cfg;
    long prec = cfg.working_precision();
    QuadField k = field_from_discriminant(-23, prec);
    GLMatrix a = element_to_matrix(k, 1, 1, 5);
    IndexVector v = transpose_apply(a, IndexVector(0, 1, 5));
    CHECK(relative_error(fricke_invariant(k, 5, a, cfg), fricke(v, k.tau_at(prec), cfg)) < tol(cfg));
}

TEST_CASE("d_N is nonzero")
{
    EvalConfig cfg;
    QuadField k = field_from_discriminant(-40, cfg.working_precision());
    CHECK_FALSE(eval_dn(k, 3, cfg).is_zero());
    std::vector<BigComplex> vals{BigComplex(1, 0, 128), BigComplex(3, 0, 128), BigComplex(0, 1, 128)};
    // (1-3)^2 (1-i)^2 (3-i)^2 = 4 * (-2i) * (8 - 6i) = -48 - 64i
    BigComplex d = discriminant_of_values(vals);
    CHECK(d.real() == Real(-48L, 128));
    CHECK(d.imag() == Real(-64L, 128));
}

TEST_CASE("magnitude bounds and the class number bound")
{
    EvalConfig cfg;
    QuadField k = field_from_discriminant(-40, cfg.working_precision());
    MagnitudeReport m = check_magnitude_bounds(k, 4, cfg);
    CHECK(m.hypotheses.all());
    CHECK(m.lower_bound_holds);
    CHECK(m.upper_bound_holds);
    CHECK(m.margin_lower.sign() > 0);
    CHECK(m.minimizer.vector() == IndexVector(0, 1, 4));
    CHECK(m.maximizer.vector() == IndexVector(2, 1, 4));
    CHECK(m.entries.size() == 6);

    CorollaryBound c = corollary_bound(k, 4);
    CHECK(c.class_number == 2);
    CHECK(c.ell == 6);
    CHECK(c.bound == 60);
    CHECK_FALSE(c.satisfied);
    CorollaryBound c2 = corollary_bound(k, 2);
    CHECK(c2.ell == 3);
    CHECK(c2.bound == 6);
}
