#ifndef CMUNITS_FRICKE_FAMILY_HPP
#define CMUNITS_FRICKE_FAMILY_HPP

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cmunits/modular_functions.hpp"
#include "cmunits/unity_root.hpp"

namespace cmunits
{

/*
 * Class of an index vector modulo +-Z^2. The representative is the
 * lexicographically smaller of (a, b) and (-a mod N, -b mod N).
 */
class CanonicalVector
{
    IndexVector v_;

    explicit CanonicalVector(IndexVector v) : v_(v) {}
    friend CanonicalVector canonicalize(IndexVector const & v);

public:
    IndexVector const & vector() const { return v_; }
    std::int64_t a() const { return v_.a(); }
    std::int64_t b() const { return v_.b(); }
    std::int64_t level() const { return v_.level(); }
    std::string to_string() const { return v_.to_string(); }

    friend bool operator==(CanonicalVector const &, CanonicalVector const &) = default;
    friend auto operator<=>(CanonicalVector const &, CanonicalVector const &) = default;
};

CanonicalVector canonicalize(IndexVector const & v);

// Integer 2x2 matrix [[a, b], [c, d]].
struct IntMatrix
{
    std::int64_t a = 1, b = 0, c = 0, d = 1;

    std::int64_t det() const { return a * d - b * c; }
    friend IntMatrix operator*(IntMatrix const & l, IntMatrix const & r)
    {
        return {l.a * r.a + l.b * r.c, l.a * r.b + l.b * r.d, l.c * r.a + l.d * r.c, l.c * r.b + l.d * r.d};
    }
    friend bool operator==(IntMatrix const &, IntMatrix const &) = default;
};

// Moebius action (a tau + b) / (c tau + d).
BigComplex moebius(IntMatrix const & m, BigComplex const & tau);

/*
 * Element of GL2(Z/NZ) with entries reduced to [0, N). Equality is
 * equality of classes modulo +-I.
 */
class GLMatrix
{
    std::int64_t x_ = 1, y_ = 0, z_ = 0, w_ = 1, n_ = 2;

public:
    GLMatrix() = default;
    // Throws SingularMatrix if x w - y z is not a unit mod N.
    GLMatrix(std::int64_t x, std::int64_t y, std::int64_t z, std::int64_t w, std::int64_t level);
    static GLMatrix identity(std::int64_t level) { return {1, 0, 0, 1, level}; }

    std::int64_t x() const { return x_; }
    std::int64_t y() const { return y_; }
    std::int64_t z() const { return z_; }
    std::int64_t w() const { return w_; }
    std::int64_t level() const { return n_; }
    std::int64_t det() const;

    GLMatrix negated() const { return {-x_, -y_, -z_, -w_, n_}; }
    GLMatrix inverse() const;
    // Representative of the class mod +-I: lexicographically smaller of
    // the entries of M and -M.
    std::array<std::int64_t, 4> class_key() const;
    bool is_identity_class() const;

    // Lift to SL2(Z); requires det = 1 mod N. Deterministic.
    IntMatrix lift_sl2() const;

    std::string to_string() const; // "[[x,y],[z,w]] mod N"

    friend GLMatrix operator*(GLMatrix const & l, GLMatrix const & r);
    friend bool operator==(GLMatrix const & l, GLMatrix const & r)
    {
        return l.n_ == r.n_ && l.class_key() == r.class_key();
    }
};

std::int64_t inverse_mod(std::int64_t a, std::int64_t m); // throws SingularMatrix
bool is_unit_mod(std::int64_t a, std::int64_t m);

// Transpose of gamma applied to v, reduced mod Z^2 (not +-).
IndexVector transpose_apply(GLMatrix const & gamma, IndexVector const & v);
// canonicalize(transpose(gamma) v).
CanonicalVector transpose_action(GLMatrix const & gamma, IndexVector const & v);

// Every class of V_N / (v ~ +-v mod Z^2) exactly once, sorted.
std::vector<CanonicalVector> enumerate_vn_classes(std::int64_t level);

struct ModularityResult
{
    bool in_level;
    // prod_v e^{pi i v2 (1 - v1) m(v)} at the stored representatives.
    UnityRoot zeta;
};

/*
 * Congruence criterion for zeta * prod g_v^{m(v)} to have level N. The
 * root of unity depends on the Z^2 representative of each vector, so the
 * exponents are keyed by the reduced vector rather than by its +- class.
 */
ModularityResult modularity_check(std::vector<std::pair<IndexVector, std::int64_t>> const & exponents,
                                  std::int64_t level);

enum class FamilyKind
{
    fricke,
    siegel12n,
};

std::string_view to_string(FamilyKind kind);

/*
 * For gamma with det = 1 mod N, lifted to SL2(Z): returns
 *   |h_{t gamma v}(tau) - h_v(gamma tau)| / |h_v(gamma tau)|
 * with h = f or g^{12N}.
 */
Real sl2_compatibility_test(GLMatrix const & gamma, IndexVector const & v, BigComplex const & tau, FamilyKind kind,
                            EvalConfig const & cfg);

} // namespace cmunits

#endif
