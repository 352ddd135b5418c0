#include <doctest.h>

#include "cmunits/cm_fields.hpp"
#include "cmunits/error.hpp"
#include "cmunits/modular_functions.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace cmunits;
using testing_support::point;
using testing_support::pow2;
using testing_support::tol;

TEST_CASE("bernoulli2 and fractional part")
{
    CHECK(bernoulli2(Rational(0)) == Rational(1, 6));
    CHECK(bernoulli2(Rational(1, 2)) == Rational(-1, 12));
    CHECK(bernoulli2(Rational(1, 4)) == Rational(-1, 48));
    CHECK(fractional_part(Rational(7, 4)) == Rational(3, 4));
    CHECK(fractional_part(Rational(-1, 4)) == Rational(3, 4));
    CHECK(fractional_part(Rational(-2)) == Rational(0));
}

TEST_CASE("index vectors")
{
    IndexVector v(5, -1, 4);
    CHECK(v.a() == 1);
    CHECK(v.b() == 3);
    CHECK(v.to_string() == "1/4,3/4");
    CHECK(v.negated() == IndexVector(3, 1, 4));
    CHECK(siegel_q_order(IndexVector(0, 1, 4)) == Rational(1, 12));
    CHECK(siegel_q_order(IndexVector(2, 1, 4)) == Rational(-1, 24));

    auto code_of = [](auto f) {
        try {
            f();
        } catch (Error const & e) {
            return e.code();
        }
        return ErrorCode::InvalidArgument;
    };
    CHECK(code_of([] { IndexVector(4, 8, 4); }) == ErrorCode::ZeroVector);
    CHECK(code_of([] { IndexVector(0, 1, 1); }) == ErrorCode::ZeroVector);
    CHECK_THROWS_AS(IndexVector(2, 2, 4), Error);
    CHECK_THROWS_AS(IndexVector(1, 1, 0), Error);
}

TEST_CASE("eta agrees with the pentagonal series")
{
    EvalConfig cfg;
    testing_support::Sampler s(21);
    for (int i = 0; i < 20; ++i) {
        BigComplex tau = s.tau(cfg.working_precision());
        CHECK(relative_error(dedekind_eta(tau, cfg), oracles::eta_pentagonal(tau)) < tol(cfg));
    }
}

TEST_CASE("siegel product agrees with the theta quotient")
{
    EvalConfig cfg;
    long prec = cfg.working_precision();
    testing_support::Sampler s(22);
    for (int i = 0; i < 30; ++i) {
        std::int64_t n = s.integer(2, 12);
        IndexVector v = s.vector(n);
        BigComplex tau = s.tau(prec);
        BigComplex got = siegel(v, tau, cfg);
        BigComplex want = oracles::siegel_theta(v.v1(), v.v2(), tau);
        CHECK(relative_error(got, want) < tol(cfg));
    }
    // An unreduced representative goes through the same product.
    BigComplex tau = point(Rational(1, 5), Rational(9, 10), prec);
    CHECK(relative_error(siegel_at(Rational(5, 4), Rational(-1, 4), tau, cfg),
                         oracles::siegel_theta(Rational(5, 4), Rational(-1, 4), tau)) < tol(cfg));
}

TEST_CASE("discriminant function")
{
    EvalConfig cfg;
    long prec = cfg.working_precision();
    testing_support::Sampler s(23);
    for (int i = 0; i < 10; ++i) {
        BigComplex tau = s.tau(prec);
        BigComplex d = delta(tau, cfg);
        CHECK(relative_error(d, pow(dedekind_eta(tau, cfg), 24)) < tol(cfg));
        BigComplex g2 = eisenstein_g2(tau, cfg), g3 = eisenstein_g3(tau, cfg);
        CHECK(relative_error(d, pow(g2, 3) - g3 * g3 * 27L) < tol(cfg));
        // Delta(-1/tau) = tau^12 Delta(tau)
        BigComplex inv = BigComplex(-1, 0, prec) / tau;
        CHECK(relative_error(delta(inv, cfg), pow(tau, 12) * d) < tol(cfg));
    }
}

TEST_CASE("j invariant")
{
    EvalConfig cfg;
    long prec = cfg.working_precision();
    BigComplex ji = j_invariant(point(Rational(0), Rational(1), prec), cfg);
    CHECK(relative_error(ji, BigComplex(1728, 0, prec)) < tol(cfg));

    // j(sqrt(-2)) = 8000
    BigComplex r2(Real(0L, prec), sqrt(Real(2L, prec)));
    CHECK(relative_error(j_invariant(r2, cfg), BigComplex(8000, 0, prec)) < tol(cfg));

    BigComplex t = point(Rational(-3, 10), Rational(11, 10), prec);
    BigComplex t1 = point(Rational(7, 10), Rational(11, 10), prec);
    CHECK(relative_error(j_invariant(t1, cfg), j_invariant(t, cfg)) < tol(cfg));
}

TEST_CASE("weierstrass function")
{
    EvalConfig cfg;
    long prec = cfg.working_precision();
    BigComplex tau = point(Rational(1, 7), Rational(6, 5), prec);

    // even function of v, so depends on the class mod +-
    IndexVector v(1, 2, 5);
    CHECK(relative_error(wp(v, tau, cfg), wp(v.negated(), tau, cfg)) < tol(cfg));

    // half period on the imaginary axis: real
    BigComplex w = wp(IndexVector(0, 1, 2), point(Rational(0), Rational(1), prec), cfg);
    CHECK(abs(w.imag()) < tol(cfg) * w.abs());

    // lattice sum converges to it
    EvalConfig low{128, 24, std::nullopt};
    BigComplex t128 = tau.with_precision(152);
    BigComplex q = wp(v, t128, low);
    BigComplex e50 = wp_lattice_oracle(v, t128, 50);
    BigComplex e100 = wp_lattice_oracle(v, t128, 100);
    CHECK(relative_error(e100, q) < relative_error(e50, q));
    CHECK(relative_error(wp_lattice_extrapolated(v, t128, 200, 7), q).to_double() < 1e-10);
}

TEST_CASE("wp differences factor through siegel functions")
{
    EvalConfig cfg;
    long prec = cfg.working_precision();
    testing_support::Sampler s(24);
    int done = 0;
    while (done < 15) {
        std::int64_t n = s.integer(3, 9);
        IndexVector u = s.vector(n), v = s.vector(n);
        if (u == v || u == v.negated())
            continue;
        Rational sum1 = u.v1() + v.v1(), sum2 = u.v2() + v.v2();
        Rational dif1 = u.v1() - v.v1(), dif2 = u.v2() - v.v2();
        BigComplex tau = s.tau(prec);
        BigComplex lhs = wp(u, tau, cfg) - wp(v, tau, cfg);
        BigComplex gu = siegel_at(u.v1(), u.v2(), tau, cfg), gv = siegel_at(v.v1(), v.v2(), tau, cfg);
        BigComplex rhs = -(siegel_at(sum1, sum2, tau, cfg) * siegel_at(dif1, dif2, tau, cfg)) / (gu * gu * gv * gv) *
                         pow(dedekind_eta(tau, cfg), 4);
        CHECK(relative_error(lhs, rhs) < tol(cfg));
        ++done;
    }
}

TEST_CASE("fricke function and its quotient at a CM point")
{
    EvalConfig cfg;
    long prec = cfg.working_precision();
    BigComplex tau = point(Rational(1, 3), Rational(4, 3), prec);
    IndexVector v(1, 3, 4);
    BigComplex g2 = eisenstein_g2(tau, cfg), g3 = eisenstein_g3(tau, cfg);
    BigComplex direct = g2 * g3 / delta(tau, cfg) * wp(v, tau, cfg) * (-(128L * 243L));
    CHECK(relative_error(fricke(v, tau, cfg), direct) < tol(cfg));

    // Quotient of Fricke differences at tau_K, d = -40, N = 4, through the
    // siegel factorization with u = (0,1/4), u' = (0,1/2), w = (1/2,1/2).
    QuadField k = field_from_discriminant(-40, prec);
    BigComplex tk = k.tau_at(prec);
    BigComplex lhs = (fricke(IndexVector(0, 1, 4), tk, cfg) - fricke(IndexVector(1, 1, 2), tk, cfg)) /
                     (fricke(IndexVector(0, 1, 2), tk, cfg) - fricke(IndexVector(1, 1, 2), tk, cfg));
    auto g = [&](Rational a, Rational b) { return siegel_at(a, b, tk, cfg); };
    BigComplex gu = g(Rational(0), Rational(1, 4)), gu2 = g(Rational(0), Rational(1, 2));
    BigComplex rhs = g(Rational(1, 2), Rational(3, 4)) * g(Rational(-1, 2), Rational(-1, 4)) * gu2 * gu2 /
                     (gu * gu * g(Rational(1, 2), Rational(1)) * g(Rational(-1, 2), Rational(0)));
    CHECK(relative_error(lhs, rhs) < tol(cfg));
}

TEST_CASE("q-order of the siegel function")
{
    EvalConfig cfg;
    long prec = cfg.working_precision();
    for (auto [a, b, n] : {std::array<std::int64_t, 3>{1, 0, 3}, {2, 1, 5}, {3, 1, 7}}) {
        IndexVector v(a, b, n);
        Real y(50L, prec);
        Real lg = log(siegel(v, BigComplex(Real(0L, prec), y), cfg).abs());
        Real est = lg / (Real::pi(prec) * y * -2L);
        Real want(siegel_q_order(v), prec);
        CHECK(abs(est - want).to_double() < 1e-6);
    }
}
