#include <doctest.h>

#include <set>

#include "cmunits/error.hpp"
#include "cmunits/fricke_family.hpp"
#include "support.hpp"

using namespace cmunits;
using testing_support::tol;

namespace
{

GLMatrix random_gl(testing_support::Sampler & s, std::int64_t n)
{
    while (true) {
        std::int64_t x = s.integer(0, n - 1), y = s.integer(0, n - 1), z = s.integer(0, n - 1), w = s.integer(0, n - 1);
        if (is_unit_mod(x * w - y * z, n))
            return {x, y, z, w, n};
    }
}

GLMatrix random_sl(testing_support::Sampler & s, std::int64_t n)
{
    while (true) {
        GLMatrix g = random_gl(s, n);
        if (g.det() == 1 % n)
            return g;
    }
}

} // namespace

TEST_CASE("canonical representatives mod +-Z^2")
{
    CHECK(canonicalize(IndexVector(3, 1, 4)).vector() == IndexVector(1, 3, 4));
    CHECK(canonicalize(IndexVector(1, 3, 4)).vector() == IndexVector(1, 3, 4));
    CHECK(canonicalize(IndexVector(2, 3, 4)).vector() == IndexVector(2, 1, 4));
    CHECK(canonicalize(IndexVector(0, 3, 4)).vector() == IndexVector(0, 1, 4));
    CHECK(canonicalize(IndexVector(1, 1, 2)).vector() == IndexVector(1, 1, 2));
}

TEST_CASE("classes of V_N")
{
    CHECK(enumerate_vn_classes(2).size() == 3);
    CHECK(enumerate_vn_classes(3).size() == 4);
    CHECK(enumerate_vn_classes(4).size() == 6);
    CHECK(enumerate_vn_classes(5).size() == 12);
    CHECK(enumerate_vn_classes(6).size() == 12);

    for (std::int64_t n = 2; n <= 9; ++n) {
        std::set<CanonicalVector> seen;
        for (std::int64_t a = 0; a < n; ++a)
            for (std::int64_t b = 0; b < n; ++b)
                if ((a || b) && gcd3(a, b, n) == 1)
                    seen.insert(canonicalize(IndexVector(a, b, n)));
        auto list = enumerate_vn_classes(n);
        CHECK(std::set<CanonicalVector>(list.begin(), list.end()) == seen);
        CHECK(std::is_sorted(list.begin(), list.end()));
    }
}

TEST_CASE("GL2(Z/N) elements")
{
    GLMatrix g(3, 0, 2, 3, 4);
    CHECK(g.det() == 1);
    CHECK(g == g.negated());
    CHECK((g * g.inverse()).is_identity_class());
    CHECK_THROWS_AS(GLMatrix(2, 0, 0, 1, 4), Error);
    CHECK(inverse_mod(3, 10) == 7);
    CHECK_THROWS_AS(inverse_mod(4, 10), Error);

    IntMatrix lift = g.lift_sl2();
    CHECK(lift.det() == 1);
    CHECK(GLMatrix(lift.a, lift.b, lift.c, lift.d, 4) == g);
    CHECK_THROWS_AS(GLMatrix(1, 0, 0, 3, 4).lift_sl2(), Error);

    testing_support::Sampler s(31);
    for (int i = 0; i < 40; ++i) {
        std::int64_t n = s.integer(2, 15);
        GLMatrix m = random_sl(s, n);
        IntMatrix l = m.lift_sl2();
        CHECK(l.det() == 1);
        CHECK(floor_mod(l.a - m.x(), n) == 0);
        CHECK(floor_mod(l.b - m.y(), n) == 0);
        CHECK(floor_mod(l.c - m.z(), n) == 0);
        CHECK(floor_mod(l.d - m.w(), n) == 0);
    }
}

TEST_CASE("transpose action")
{
    GLMatrix g(3, 0, 2, 3, 4);
    CHECK(transpose_apply(g, IndexVector(0, 1, 4)) == IndexVector(2, 3, 4));
    CHECK(transpose_action(g, IndexVector(0, 1, 4)).vector() == IndexVector(2, 1, 4));
    CHECK(transpose_apply(GLMatrix::identity(5), IndexVector(2, 3, 5)) == IndexVector(2, 3, 5));

    // t(gd) v = t d (t g v): a right action on row vectors
    testing_support::Sampler s(32);
    for (int i = 0; i < 50; ++i) {
        std::int64_t n = s.integer(2, 12);
        GLMatrix a = random_gl(s, n), b = random_gl(s, n);
        IndexVector v = s.vector(n);
        CHECK(transpose_apply(a * b, v) == transpose_apply(b, transpose_apply(a, v)));
        CHECK(transpose_action(a.negated(), v) == transpose_action(a, v));
    }
}

TEST_CASE("modularity criterion")
{
    ModularityResult r = modularity_check({{IndexVector(0, 1, 4), 48}}, 4);
    CHECK(r.in_level);
    CHECK(r.zeta.is_one());

    ModularityResult q = modularity_check({{IndexVector(2, 3, 4), 2}, {IndexVector(0, 1, 4), -2}}, 4);
    CHECK(q.in_level);
    // 3/4 * 1/2 * 2 / 2 - 1/4 * 1 * 2 / 2 = 1/8 turn
    CHECK(q.zeta == UnityRoot(1, 8));

    CHECK_FALSE(modularity_check({{IndexVector(0, 1, 4), 1}}, 4).in_level);
    CHECK_FALSE(modularity_check({{IndexVector(1, 1, 4), 12}}, 4).in_level);
    CHECK(modularity_check({{IndexVector(0, 1, 3), 36}}, 3).in_level);
    CHECK_THROWS_AS(modularity_check({{IndexVector(0, 1, 3), 12}}, 4), Error);
}

TEST_CASE("SL2 compatibility of both families")
{
    EvalConfig cfg;
    testing_support::Sampler s(33);
    for (int i = 0; i < 12; ++i) {
        std::int64_t n = s.integer(2, 7);
        GLMatrix g = random_sl(s, n);
        IndexVector v = s.vector(n);
        BigComplex tau = s.tau(cfg.working_precision(), Rational(4, 5), Rational(2));
        CHECK(sl2_compatibility_test(g, v, tau, FamilyKind::fricke, cfg) < tol(cfg));
        CHECK(sl2_compatibility_test(g, v, tau, FamilyKind::siegel12n, cfg) < tol(cfg));
    }
}

TEST_CASE("unity roots")
{
    UnityRoot z(7, 8);
    CHECK(z.order() == 8);
    CHECK(z.exponent() == 7);
    CHECK((z * UnityRoot(1, 8)).is_one());
    CHECK(UnityRoot(6, 8) == UnityRoot(3, 4));
    CHECK(UnityRoot(-1, 8) == z);
    CHECK(z.exponent_over(16) == 14);
    CHECK(z.to_string() == "zeta_8^7");
    CHECK(z.pow(3) == UnityRoot(5, 8));
}
