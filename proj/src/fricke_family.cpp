#include "cmunits/fricke_family.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "cmunits/error.hpp"

namespace cmunits
{

namespace
{

// Returns g = gcd(a, b) and sets x, y with a x + b y = g.
std::int64_t ext_gcd(std::int64_t a, std::int64_t b, std::int64_t & x, std::int64_t & y)
{
    std::int64_t old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
    while (r != 0) {
        std::int64_t q = old_r / r;
        std::tie(old_r, r) = std::make_pair(r, old_r - q * r);
        std::tie(old_s, s) = std::make_pair(s, old_s - q * s);
        std::tie(old_t, t) = std::make_pair(t, old_t - q * t);
    }
    if (old_r < 0) {
        old_r = -old_r;
        old_s = -old_s;
        old_t = -old_t;
    }
    x = old_s;
    y = old_t;
    return old_r;
}

} // namespace

CanonicalVector canonicalize(IndexVector const & v)
{
    IndexVector neg = v.negated();
    return CanonicalVector(std::min(v, neg));
}

BigComplex moebius(IntMatrix const & m, BigComplex const & tau)
{
    long prec = tau.precision();
    BigComplex num = tau * m.a + BigComplex(Real(m.b, prec));
    BigComplex den = tau * m.c + BigComplex(Real(m.d, prec));
    return num / den;
}

bool is_unit_mod(std::int64_t a, std::int64_t m)
{
    return std::gcd(floor_mod(a, m), m) == 1;
}

std::int64_t inverse_mod(std::int64_t a, std::int64_t m)
{
    std::int64_t x = 0, y = 0;
    if (ext_gcd(floor_mod(a, m), m, x, y) != 1)
        throw Error(ErrorCode::SingularMatrix, std::to_string(a) + " is not a unit mod " + std::to_string(m));
    return floor_mod(x, m);
}

GLMatrix::GLMatrix(std::int64_t x, std::int64_t y, std::int64_t z, std::int64_t w, std::int64_t level)
{
    if (level < 2)
        throw Error(ErrorCode::InvalidArgument, "matrix level must be at least 2");
    n_ = level;
    x_ = floor_mod(x, level);
    y_ = floor_mod(y, level);
    z_ = floor_mod(z, level);
    w_ = floor_mod(w, level);
    if (!is_unit_mod(det(), n_))
        throw Error(ErrorCode::SingularMatrix, to_string() + " is not invertible");
}

std::int64_t GLMatrix::det() const
{
    return floor_mod(x_ * w_ - y_ * z_, n_);
}

GLMatrix GLMatrix::inverse() const
{
    std::int64_t di = inverse_mod(det(), n_);
    return {w_ * di, -y_ * di, -z_ * di, x_ * di, n_};
}

std::array<std::int64_t, 4> GLMatrix::class_key() const
{
    std::array<std::int64_t, 4> pos{x_, y_, z_, w_};
    std::array<std::int64_t, 4> neg{floor_mod(-x_, n_), floor_mod(-y_, n_), floor_mod(-z_, n_), floor_mod(-w_, n_)};
    return std::min(pos, neg);
}

bool GLMatrix::is_identity_class() const
{
    return *this == identity(n_);
}

IntMatrix GLMatrix::lift_sl2() const
{
    if (det() != 1 % n_)
        throw Error(ErrorCode::InvalidArgument, to_string() + " does not have determinant 1");

    // Bottom row: c' = z (or N when z = 0), d' = w + kN coprime to c'.
    std::int64_t c = z_ == 0 ? n_ : z_;
    std::int64_t d = w_;
    while (std::gcd(c, d) != 1)
        d += n_;

    // a0 d - b0 c = 1, then shift along (c, d) to match the top row mod N.
    std::int64_t s = 0, t = 0;
    ext_gcd(d, c, s, t); // d s + c t = 1
    std::int64_t a0 = s, b0 = -t;
    for (std::int64_t k = 0; k < n_; ++k) {
        std::int64_t a = a0 + k * c;
        std::int64_t b = b0 + k * d;
        if (floor_mod(a - x_, n_) == 0 && floor_mod(b - y_, n_) == 0)
            return {a, b, c, d};
    }
    throw Error(ErrorCode::InvalidArgument, "no SL2(Z) lift found for " + to_string());
}

std::string GLMatrix::to_string() const
{
    return "[[" + std::to_string(x_) + "," + std::to_string(y_) + "],[" + std::to_string(z_) + "," + std::to_string(w_)
        + "]] mod " + std::to_string(n_);
}

GLMatrix operator*(GLMatrix const & l, GLMatrix const & r)
{
    if (l.n_ != r.n_)
        throw Error(ErrorCode::InvalidArgument, "matrix levels differ");
    return {l.x_ * r.x_ + l.y_ * r.z_, l.x_ * r.y_ + l.y_ * r.w_, l.z_ * r.x_ + l.w_ * r.z_,
            l.z_ * r.y_ + l.w_ * r.w_, l.n_};
}

IndexVector transpose_apply(GLMatrix const & gamma, IndexVector const & v)
{
    if (gamma.level() != v.level())
        throw Error(ErrorCode::InvalidArgument, "matrix and vector levels differ");
    // t[[x, y], [z, w]] = [[x, z], [y, w]]
    return {gamma.x() * v.a() + gamma.z() * v.b(), gamma.y() * v.a() + gamma.w() * v.b(), v.level()};
}

CanonicalVector transpose_action(GLMatrix const & gamma, IndexVector const & v)
{
    return canonicalize(transpose_apply(gamma, v));
}

std::vector<CanonicalVector> enumerate_vn_classes(std::int64_t level)
{
    if (level < 2)
        throw Error(ErrorCode::InvalidArgument, "level must be at least 2");
    std::set<CanonicalVector> classes;
    for (std::int64_t a = 0; a < level; ++a)
        for (std::int64_t b = 0; b < level; ++b)
            if ((a != 0 || b != 0) && gcd3(a, b, level) == 1)
                classes.insert(canonicalize(IndexVector(a, b, level)));
    return {classes.begin(), classes.end()};
}

ModularityResult modularity_check(std::vector<std::pair<IndexVector, std::int64_t>> const & exponents,
                                  std::int64_t level)
{
    std::int64_t s11 = 0, s22 = 0, s12 = 0, total = 0;
    Rational turns(0);
    for (auto const & [v, m] : exponents) {
        if (v.level() != level)
            throw Error(ErrorCode::InvalidArgument, "vector " + v.to_string() + " is not of level " + std::to_string(level));
        s11 += m * v.a() * v.a();
        s22 += m * v.b() * v.b();
        s12 += m * v.a() * v.b();
        total += m;
        // e^{pi i v2 (1 - v1) m} is v2 (1 - v1) m / 2 turns
        turns += v.v2() * (Rational(1) - v.v1()) * Rational(m) / Rational(2);
    }
    std::int64_t quad_mod = std::gcd<std::int64_t>(2, level) * level;
    bool ok = floor_mod(s11, quad_mod) == 0 && floor_mod(s22, quad_mod) == 0 && floor_mod(s12, level) == 0
        && floor_mod(std::gcd<std::int64_t>(12, level) * total, 12) == 0;
    return {ok, UnityRoot::from_turns(turns)};
}

std::string_view to_string(FamilyKind kind)
{
    return kind == FamilyKind::fricke ? "fricke" : "siegel12N";
}

Real sl2_compatibility_test(GLMatrix const & gamma, IndexVector const & v, BigComplex const & tau, FamilyKind kind,
                            EvalConfig const & cfg)
{
    require_upper_half_plane(tau);
    IntMatrix lift = gamma.lift_sl2();
    long prec = cfg.working_precision();
    BigComplex t = tau.with_precision(prec);
    BigComplex moved = moebius(lift, t);
    IndexVector image = transpose_apply(gamma, v);

    auto h = [&](IndexVector const & u, BigComplex const & at) {
        if (kind == FamilyKind::fricke)
            return fricke(u, at, cfg);
        return pow(siegel(u, at, cfg), 12 * u.level());
    };
    return relative_error(h(image, t), h(v, moved));
}

} // namespace cmunits
