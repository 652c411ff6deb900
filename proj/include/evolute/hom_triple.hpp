#pragma once

#include <array>

#include "evolute/scalar.hpp"

namespace evolute {

/// Interpretation tag: the same triple (a,b,c) is the point [a:b:c] or the
/// line ax+by+cz = 0. The construction of the evolute dualizes freely, so
/// points and lines share one type.
enum class Interp { point, line };

template <class S>
struct HomTriple {
    S a{}, b{}, c{};
    Interp tag = Interp::point;

    HomTriple() = default;
    HomTriple(S a_, S b_, S c_, Interp t = Interp::point)
        : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), tag(t) {}

    bool all_zero() const {
        using T = scalar_traits<S>;
        return T::is_zero(a) && T::is_zero(b) && T::is_zero(c);
    }

    /// Largest coordinate magnitude, for scale-aware tolerances.
    S magnitude() const {
        using T = scalar_traits<S>;
        S m = T::abs(a);
        if (T::abs(b) > m) m = T::abs(b);
        if (T::abs(c) > m) m = T::abs(c);
        return m;
    }
};

template <class S>
HomTriple<S> raw_cross(const HomTriple<S>& u, const HomTriple<S>& v, Interp tag) {
    return HomTriple<S>(S(u.b * v.c - u.c * v.b),
                        S(u.c * v.a - u.a * v.c),
                        S(u.a * v.b - u.b * v.a), tag);
}

/// The line through two points, or dually the intersection of two lines.
/// Throws ZeroResult when the inputs are scale-equivalent.
template <class S>
HomTriple<S> cross(const HomTriple<S>& u, const HomTriple<S>& v) {
    Interp tag = (u.tag == v.tag)
                     ? (u.tag == Interp::point ? Interp::line : Interp::point)
                     : Interp::point;
    HomTriple<S> w = raw_cross(u, v, tag);
    using T = scalar_traits<S>;
    S scale = S(u.magnitude() * v.magnitude());
    if (T::is_zero(w.a, scale) && T::is_zero(w.b, scale) && T::is_zero(w.c, scale))
        throw ZeroResult("cross product vanishes (scale-equivalent inputs)");
    return w;
}

template <class S>
S det3(const HomTriple<S>& p, const HomTriple<S>& q, const HomTriple<S>& r) {
    return S(p.a * (q.b * r.c - q.c * r.b) - p.b * (q.a * r.c - q.c * r.a) +
             p.c * (q.a * r.b - q.b * r.a));
}

/// det(p,q,r) == 0, with a scale-aware tolerance in approx arithmetic:
/// |det| <= tol * |p| |q| |r|.
template <class S>
bool collinear(const HomTriple<S>& p, const HomTriple<S>& q, const HomTriple<S>& r) {
    using T = scalar_traits<S>;
    S scale = S(p.magnitude() * q.magnitude() * r.magnitude());
    return T::is_zero(det3(p, q, r), scale);
}

/// Canonical representative of the scale class: divide by the last nonzero
/// coordinate in the fixed order c, then b, then a.
template <class S>
HomTriple<S> canonical(const HomTriple<S>& p) {
    using T = scalar_traits<S>;
    S m = p.magnitude();
    if (T::is_zero(m)) throw ZeroResult("zero triple has no canonical form");
    if (!T::is_zero(p.c, m)) return HomTriple<S>(S(p.a / p.c), S(p.b / p.c), S(1), p.tag);
    if (!T::is_zero(p.b, m)) return HomTriple<S>(S(p.a / p.b), S(1), S(0), p.tag);
    return HomTriple<S>(S(1), S(0), S(0), p.tag);
}

/// Scale-invariant equality: all three 2x2 minors of the pair vanish.
template <class S>
bool scale_equivalent(const HomTriple<S>& u, const HomTriple<S>& v) {
    using T = scalar_traits<S>;
    HomTriple<S> w = raw_cross(u, v, u.tag);
    S scale = S(u.magnitude() * v.magnitude());
    return T::is_zero(w.a, scale) && T::is_zero(w.b, scale) && T::is_zero(w.c, scale);
}

/// Affine chart (a/c, b/c); AtInfinity when c = 0.
template <class S>
std::array<S, 2> affine_chart(const HomTriple<S>& p) {
    using T = scalar_traits<S>;
    if (T::is_zero(p.c, p.magnitude()))
        throw AtInfinity("affine chart of a point at infinity");
    return {S(p.a / p.c), S(p.b / p.c)};
}

}  // namespace evolute
