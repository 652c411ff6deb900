#pragma once

#include <array>
#include <vector>

#include "evolute/dual.hpp"
#include "evolute/evolute_map.hpp"

namespace evolute {

/// Coordinates (x, y) on the pentagon moduli space M_5: the class of the
/// normalized pentagon with vertices
///   [0:-1:1], [1:0:0], [0:1:0], [-1:0:1], [x:y:1].
template <class S>
struct PentagonModuli {
    S x{}, y{};
};

enum class Locus { x_zero, y_zero, x_plus_one, y_plus_one, x_plus_y_plus_one, at_infinity };

inline const char* locus_name(Locus l) {
    switch (l) {
        case Locus::x_zero: return "x=0";
        case Locus::y_zero: return "y=0";
        case Locus::x_plus_one: return "x+1=0";
        case Locus::y_plus_one: return "y+1=0";
        case Locus::x_plus_y_plus_one: return "x+y+1=0";
        case Locus::at_infinity: return "at infinity";
    }
    return "?";
}

/// The subset of the degeneracy loci containing m.
template <class S>
std::vector<Locus> degeneracy_report(const PentagonModuli<S>& m) {
    using T = scalar_traits<S>;
    std::vector<Locus> out;
    S sx = T::abs(m.x), sy = T::abs(m.y);
    if (T::is_zero(m.x, S(1 + sy))) out.push_back(Locus::x_zero);
    if (T::is_zero(m.y, S(1 + sx))) out.push_back(Locus::y_zero);
    if (T::is_zero(S(m.x + 1), S(1 + sx))) out.push_back(Locus::x_plus_one);
    if (T::is_zero(S(m.y + 1), S(1 + sy))) out.push_back(Locus::y_plus_one);
    if (T::is_zero(S(m.x + m.y + 1), S(1 + sx + sy))) out.push_back(Locus::x_plus_y_plus_one);
    return out;
}

template <class S>
std::array<HomTriple<S>, 4> standard_frame() {
    return {HomTriple<S>(S(0), S(-1), S(1)), HomTriple<S>(S(1), S(0), S(0)),
            HomTriple<S>(S(0), S(1), S(0)), HomTriple<S>(S(-1), S(0), S(1))};
}

/// The normalized pentagon P(x, y). DegenerateModuli when m is on a locus.
template <class S>
Polygon<S> pentagon_from_moduli(const PentagonModuli<S>& m) {
    auto loci = degeneracy_report(m);
    if (!loci.empty()) {
        std::vector<std::string> names;
        for (auto l : loci) names.emplace_back(locus_name(l));
        throw DegenerateModuli(std::move(names));
    }
    auto F = standard_frame<S>();
    Polygon<S> P;
    P.vertices = {F[0], F[1], F[2], F[3], HomTriple<S>(m.x, m.y, S(1))};
    return P;
}

/// Normalizes V1..V4 to the standard frame and reads the image of V5 in the
/// affine chart. Round-trips with pentagon_from_moduli.
template <class S>
PentagonModuli<S> moduli_from_pentagon(const Polygon<S>& P) {
    if (P.k() != 5) throw DegenerateInput("moduli_from_pentagon needs a pentagon");
    if (P.degenerate()) throw DegenerateInput("degenerate pentagon");
    std::array<HomTriple<S>, 4> src = {P.vertices[0], P.vertices[1], P.vertices[2],
                                       P.vertices[3]};
    ProjMap<S> M = transform_from_correspondence(src, standard_frame<S>());
    auto im = affine_chart(apply_map(M, P.vertices[4]));
    return PentagonModuli<S>{im[0], im[1]};
}

/// I(x, y) = (x+1)(y+1)(x+y+1) / (xy).
template <class S>
S invariant_I(const PentagonModuli<S>& m) {
    using T = scalar_traits<S>;
    if (T::is_zero(m.x, S(1 + T::abs(m.y))) || T::is_zero(m.y, S(1 + T::abs(m.x))))
        throw DivisionByZero("I undefined on x=0 or y=0");
    return S((m.x + 1) * (m.y + 1) * (m.x + m.y + 1) / (m.x * m.y));
}

namespace detail {

/// The closed-form map on unchecked values (also used with dual numbers):
///   xbar = (1+y)(1+x-xy)^2 / [(1+x)(-1-y+xy)(1+x-y^2)]
///   ybar = (x-y)^2 (1+x+y) / [(1+y-x^2)(1+x-y^2)]
template <class N>
std::array<N, 2> t_map_raw(const N& x, const N& y) {
    N one = x - x;  // additive zero of the right type
    one = 1 + one;
    N xy = x * y;
    N f1 = one + x;
    N f2 = 0 - one - y + xy;
    N f3 = one + x - y * y;
    N f4 = one + y - x * x;
    N nx = (one + y) * (one + x - xy) * (one + x - xy);
    N ny = (x - y) * (x - y) * (one + x + y);
    return {nx / (f1 * f2 * f3), ny / (f4 * f3)};
}

template <class S>
std::vector<std::string> vanishing_t_factors(const S& x, const S& y) {
    using T = scalar_traits<S>;
    std::vector<std::string> out;
    S ax = T::abs(x), ay = T::abs(y);
    if (T::is_zero(S(1 + x), S(1 + ax))) out.emplace_back("1+x");
    if (T::is_zero(S(-1 - y + x * y), S(1 + ay + ax * ay))) out.emplace_back("-1-y+x*y");
    if (T::is_zero(S(1 + x - y * y), S(1 + ax + ay * ay))) out.emplace_back("1+x-y^2");
    if (T::is_zero(S(1 + y - x * x), S(1 + ay + ax * ax))) out.emplace_back("1+y-x^2");
    return out;
}

}  // namespace detail

/// The evolute map in moduli coordinates. MapUndefined lists every vanishing
/// denominator factor.
template <class S>
PentagonModuli<S> t_map(const PentagonModuli<S>& m) {
    auto bad = detail::vanishing_t_factors(m.x, m.y);
    if (!bad.empty()) throw MapUndefined(std::move(bad));
    auto im = detail::t_map_raw(m.x, m.y);
    return PentagonModuli<S>{im[0], im[1]};
}

/// Image vertex that becomes V1 when renormalizing the evolute of a pentagon:
/// with vertex i of T(P) = n_i x n_{i+1}, renormalization starts at vertex 2.
/// This is the unique cyclic offset for which the geometric pipeline agrees
/// with the closed form t_map.
inline constexpr std::ptrdiff_t pentagon_renorm_offset = 2;

/// Geometric route: construct P(x,y), take the evolute, renormalize.
/// Agrees with t_map exactly in exact arithmetic.
template <class S>
PentagonModuli<S> t_map_geometric(const PentagonModuli<S>& m) {
    Polygon<S> P = pentagon_from_moduli(m);
    Polygon<S> E = evolute(P).relabeled(pentagon_renorm_offset);
    return moduli_from_pentagon(E);
}

/// Jacobian matrix of T^2 at m, computed with dual numbers:
/// rows (dx''/dx, dx''/dy), (dy''/dx, dy''/dy).
template <class S>
std::array<S, 4> t2_jacobian(const PentagonModuli<S>& m, std::array<S, 2>* image = nullptr) {
    PentagonModuli<S> m1 = t_map(m);   // definedness checks for both steps
    t_map(m1);
    using D = DualScalar<S>;
    auto step1 = detail::t_map_raw(D::var_x(m.x), D::var_y(m.y));
    auto step2 = detail::t_map_raw(step1[0], step1[1]);
    if (image) *image = {step2[0].v, step2[1].v};
    return {step2[0].dx, step2[0].dy, step2[1].dx, step2[1].dy};
}

/// J/(x'' y'') + 4/(x y), where J is the Jacobian determinant of T^2 at m and
/// (x'', y'') = T^2(x, y). Identically zero: (T^2)* omega = -4 omega for
/// omega = dx dy / (xy).
template <class S>
S jacobian_ratio_residual(const PentagonModuli<S>& m) {
    std::array<S, 2> im;
    auto J = t2_jacobian(m, &im);
    S det = S(J[0] * J[3] - J[1] * J[2]);
    return S(det / (im[0] * im[1]) + 4 / (m.x * m.y));
}

}  // namespace evolute
