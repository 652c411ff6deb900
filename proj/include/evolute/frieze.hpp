#pragma once

#include <array>
#include <cmath>
#include <cstdlib>
#include <utility>
#include <vector>

#include "evolute/pentagon_moduli.hpp"

namespace evolute {

/// A lift of a projective polygon to R^3: one representative triple per
/// vertex. Unimodular when every consecutive determinant
/// D_i = det(P_{i-1}, P_i, P_{i+1}) equals 1.
template <class S>
struct Lift {
    std::vector<std::array<S, 3>> pts;

    std::size_t n() const { return pts.size(); }
    const std::array<S, 3>& at(std::ptrdiff_t i) const {
        std::ptrdiff_t k = static_cast<std::ptrdiff_t>(pts.size());
        return pts[static_cast<std::size_t>(((i % k) + k) % k)];
    }
};

template <class S>
S det3(const std::array<S, 3>& p, const std::array<S, 3>& q, const std::array<S, 3>& r) {
    return S(p[0] * (q[1] * r[2] - q[2] * r[1]) - p[1] * (q[0] * r[2] - q[2] * r[0]) +
             p[2] * (q[0] * r[1] - q[1] * r[0]));
}

/// D_i = det(P_{i-1}, P_i, P_{i+1}), cyclic; returned 0-based with
/// dets(U)[i] corresponding to the triple centered at vertex i.
template <class S>
std::vector<S> consecutive_dets(const Lift<S>& U) {
    std::vector<S> D;
    D.reserve(U.n());
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(U.n()); ++i)
        D.push_back(det3(U.at(i - 1), U.at(i), U.at(i + 1)));
    return D;
}

/// Recurrence coefficients of the pentagon recurrence
///   P_{i+2} = a_{i+1} P_{i+1} - b_i P_i + P_{i-1}.
/// Stored 0-based: a[i] is the paper's a_{i+1}.
template <class S>
struct Coefficients {
    std::array<S, 5> a{}, b{};
};

namespace detail {

template <class S>
bool lift_degenerate(const std::vector<S>& D) {
    using T = scalar_traits<S>;
    for (const auto& d : D)
        if (T::is_zero(d)) return true;
    return false;
}

}  // namespace detail

/// Rescales a lift to the unique unimodular one: Q_i = t_i U_i with, for n=5,
///   t_i = (prod_j D_j)^{1/3} / (D_{i-1} D_{i+1}).
/// Exact arithmetic requires the cube root to be rational (InexactCubeRoot
/// otherwise); the frieze route through evolute_coefficients needs no roots.
inline Lift<double> lift_unimodular(const Lift<double>& U) {
    if (U.n() % 3 == 0) throw DegenerateLift("no unimodular lift when 3 divides n");
    auto D = consecutive_dets(U);
    if (detail::lift_degenerate(D)) throw DegenerateLift("vanishing consecutive determinant");
    const std::size_t n = U.n();
    std::vector<double> t(n);
    if (n == 5) {
        double prod = 1;
        for (double d : D) prod *= d;
        double cr = std::cbrt(prod);
        for (std::size_t i = 0; i < 5; ++i)
            t[i] = cr / (D[(i + 4) % 5] * D[(i + 1) % 5]);
    } else {
        // Solve t_{i-1} t_i t_{i+1} = 1/D_i: a circulant system on log|t|
        // plus a sign system over GF(2); both are nonsingular when 3 does
        // not divide n.
        std::vector<std::vector<double>> A(n, std::vector<double>(n + 1, 0.0));
        std::vector<std::vector<int>> Bts(n, std::vector<int>(n + 1, 0));
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j : {(i + n - 1) % n, i, (i + 1) % n}) {
                A[i][j] = 1.0;
                Bts[i][j] = 1;
            }
            A[i][n] = -std::log(std::abs(D[i]));
            Bts[i][n] = D[i] < 0 ? 1 : 0;
        }
        for (std::size_t c = 0; c < n; ++c) {  // Gaussian elimination
            std::size_t p = c;
            for (std::size_t rr = c; rr < n; ++rr)
                if (std::abs(A[rr][c]) > std::abs(A[p][c])) p = rr;
            std::swap(A[c], A[p]);
            for (std::size_t rr = 0; rr < n; ++rr) {
                if (rr == c || A[rr][c] == 0) continue;
                double f = A[rr][c] / A[c][c];
                for (std::size_t cc = c; cc <= n; ++cc) A[rr][cc] -= f * A[c][cc];
            }
            std::size_t q = n;
            for (std::size_t rr = c; rr < n; ++rr)
                if (Bts[rr][c]) { q = rr; break; }
            if (q == n) throw DegenerateLift("sign system singular");
            std::swap(Bts[c], Bts[q]);
            for (std::size_t rr = 0; rr < n; ++rr) {
                if (rr == c || !Bts[rr][c]) continue;
                for (std::size_t cc = c; cc <= n; ++cc) Bts[rr][cc] ^= Bts[c][cc];
            }
        }
        for (std::size_t i = 0; i < n; ++i)
            t[i] = (Bts[i][n] ? -1.0 : 1.0) * std::exp(A[i][n] / A[i][i]);
    }
    Lift<double> Q;
    Q.pts.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        Q.pts.push_back({t[i] * U.pts[i][0], t[i] * U.pts[i][1], t[i] * U.pts[i][2]});
    return Q;
}

inline Lift<Rat> lift_unimodular(const Lift<Rat>& U) {
    if (U.n() != 5)
        throw InexactCubeRoot("exact unimodular rescaling is implemented for n=5");
    auto D = consecutive_dets(U);
    if (detail::lift_degenerate(D)) throw DegenerateLift("vanishing consecutive determinant");
    Rat prod(1);
    for (const auto& d : D) prod *= d;
    Rat cr;
    if (!rat_cbrt(prod, cr))
        throw InexactCubeRoot("determinant product is not a perfect rational cube");
    Lift<Rat> Q;
    Q.pts.reserve(5);
    for (std::size_t i = 0; i < 5; ++i) {
        Rat t = cr / (D[(i + 4) % 5] * D[(i + 1) % 5]);
        Q.pts.push_back({Rat(t * U.pts[i][0]), Rat(t * U.pts[i][1]), Rat(t * U.pts[i][2])});
    }
    return Q;
}

/// Coefficients of a unimodular pentagon lift, by determinants:
///   a_{i+1} = det(Q_{i-1}, Q_i, Q_{i+2}),  b_i = det(Q_{i-1}, Q_{i+1}, Q_{i+2}).
template <class S>
Coefficients<S> recurrence_coefficients(const Lift<S>& Q) {
    if (Q.n() != 5) throw DegenerateLift("coefficient lemmas are n=5");
    auto D = consecutive_dets(Q);
    using T = scalar_traits<S>;
    for (const auto& d : D)
        if (T::abs(S(d - 1)) > (T::is_exact ? S(0) : S(1e-9)))
            throw DegenerateLift("lift is not unimodular");
    Coefficients<S> c;
    for (std::ptrdiff_t i = 0; i < 5; ++i) {
        c.a[static_cast<std::size_t>((i + 1) % 5)] = det3(Q.at(i - 1), Q.at(i), Q.at(i + 2));
        c.b[static_cast<std::size_t>(i)] = det3(Q.at(i - 1), Q.at(i + 1), Q.at(i + 2));
    }
    return c;
}

/// The coefficient chart: a_3 = x, a_1 = y,
///   a_4 = (1+y)/x, a_2 = (1+x+y)/(xy), a_5 = (1+x)/y,  b_i = a_{i+3}.
template <class S>
Coefficients<S> coefficients_from_moduli(const S& x, const S& y) {
    using T = scalar_traits<S>;
    if (T::is_zero(x, S(1 + T::abs(y))) || T::is_zero(y, S(1 + T::abs(x))))
        throw DivisionByZero("coefficients need x, y nonzero");
    Coefficients<S> c;
    c.a = {y, S((1 + x + y) / (x * y)), x, S((1 + y) / x), S((1 + x) / y)};
    for (std::size_t i = 0; i < 5; ++i) c.b[i] = c.a[(i + 3) % 5];
    return c;
}

/// The unimodular pentagon realizing the coefficient chart point (x, y),
/// built from the recurrence with P_1, P_2, P_3 the standard basis.
template <class S>
Lift<S> coefficient_pentagon(const S& x, const S& y) {
    using T = scalar_traits<S>;
    if (T::is_zero(x, S(1 + T::abs(y))) || T::is_zero(y, S(1 + T::abs(x))))
        throw DivisionByZero("coefficient pentagon needs x, y nonzero");
    Lift<S> P;
    P.pts = {{S(1), S(0), S(0)},
             {S(0), S(1), S(0)},
             {S(0), S(0), S(1)},
             {S(1), S(-(x + 1) / y), x},
             {S((y + 1) / x), S(-(x + y + 1) / (x * y)), S(1)}};
    return P;
}

/// (a_3, a_1) read-out of a coefficient cycle.
template <class S>
PentagonModuli<S> moduli_from_coefficients(const Coefficients<S>& c) {
    return PentagonModuli<S>{c.a[2], c.a[0]};
}

/// The evolute lift: each vertex of T(P) as the explicit double-cross-product
/// expression in the P_i, evaluated on lift representatives.
template <class S>
Lift<S> evolute_lift(const Lift<S>& P) {
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(P.n());
    auto x3 = [](const std::array<S, 3>& u, const std::array<S, 3>& v) -> std::array<S, 3> {
        return {S(u[1] * v[2] - u[2] * v[1]), S(u[2] * v[0] - u[0] * v[2]),
                S(u[0] * v[1] - u[1] * v[0])};
    };
    Lift<S> Q;
    Q.pts.reserve(P.n());
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        auto A = x3(x3(P.at(i - 2), P.at(i - 1)), x3(P.at(i), P.at(i + 1)));
        auto B = x3(x3(P.at(i - 2), P.at(i)), x3(P.at(i - 1), P.at(i + 1)));
        auto C = x3(x3(P.at(i - 1), P.at(i)), x3(P.at(i + 1), P.at(i + 2)));
        auto E = x3(x3(P.at(i - 1), P.at(i + 1)), x3(P.at(i), P.at(i + 2)));
        Q.pts.push_back(x3(x3(A, B), x3(C, E)));
    }
    return Q;
}

/// Coefficients of the unimodular rescaling of an arbitrary pentagon lift,
/// without computing any roots. Substituting the rescaling factors t_i into
/// abar_{i+1} = t_{i-1} t_i t_{i+2} det(U_{i-1}, U_i, U_{i+2}) collapses the
/// t-product to D_{i+2} / (D_{i-2} D_{i+1}), so
///   abar_{i+1} = det(U_{i-1}, U_i, U_{i+2}) D_{i+2} / (D_{i-2} D_{i+1}),
///   bbar_i     = det(U_{i-1}, U_{i+1}, U_{i+2}) D_{i-1} / (D_{i-2} D_i),
/// both invariant under any per-vertex rescaling of U. The returned cycle is
/// relabeled by one step so that the moduli read-out sits at (a_3, a_1) when
/// U is the evolute lift of a coefficient pentagon.
template <class S>
Coefficients<S> evolute_coefficients(const Lift<S>& U) {
    if (U.n() != 5) throw DegenerateLift("evolute coefficients are n=5");
    auto D = consecutive_dets(U);
    if (detail::lift_degenerate(D)) throw DegenerateLift("vanishing consecutive determinant");
    std::array<S, 5> a_raw, b_raw;
    for (std::ptrdiff_t i = 0; i < 5; ++i) {
        auto idx = [](std::ptrdiff_t j) { return static_cast<std::size_t>(((j % 5) + 5) % 5); };
        a_raw[idx(i + 1)] = S(det3(U.at(i - 1), U.at(i), U.at(i + 2)) * D[idx(i + 2)] /
                              (D[idx(i - 2)] * D[idx(i + 1)]));
        b_raw[idx(i)] = S(det3(U.at(i - 1), U.at(i + 1), U.at(i + 2)) * D[idx(i - 1)] /
                          (D[idx(i - 2)] * D[idx(i)]));
    }
    Coefficients<S> c;
    for (std::size_t k = 0; k < 5; ++k) {
        c.a[k] = a_raw[(k + 1) % 5];
        c.b[k] = b_raw[(k + 1) % 5];
    }
    return c;
}

/// Frieze route for the map: realize (x, y), take the evolute lift, read the
/// rescaled coefficients. Equals t_map exactly.
template <class S>
PentagonModuli<S> t_map_frieze(const S& x, const S& y) {
    return moduli_from_coefficients(evolute_coefficients(evolute_lift(coefficient_pentagon(x, y))));
}

/// The four rows of the frieze pattern: ones, the a-cycle starting at a_3,
/// its shift by three, ones. Adjacent 2x2 determinants (diamonds) equal 1.
template <class S>
struct FriezeRows {
    std::vector<S> top, middle1, middle2, bottom;
};

template <class S>
FriezeRows<S> frieze_rows(const S& x, const S& y) {
    auto c = coefficients_from_moduli(x, y);
    FriezeRows<S> r;
    r.top.assign(5, S(1));
    r.bottom.assign(5, S(1));
    for (std::size_t j = 0; j < 5; ++j) r.middle1.push_back(c.a[(2 + j) % 5]);
    for (std::size_t j = 0; j < 5; ++j) r.middle2.push_back(r.middle1[(j + 3) % 5]);
    return r;
}

/// Largest deviation from 1 over the ten interior diamonds
///   m_j m_{j+1} - m_{j+3}  and  m_{j+3} m_{j+4} - m_{j+1}  (m = middle1).
template <class S>
S frieze_diamond_deviation(const FriezeRows<S>& r) {
    using T = scalar_traits<S>;
    S worst(0);
    const auto& m = r.middle1;
    for (std::size_t j = 0; j < 5; ++j) {
        S d1 = S(m[j] * m[(j + 1) % 5] - r.middle2[j] - 1);
        S d2 = S(r.middle2[j] * r.middle2[(j + 1) % 5] - m[(j + 1) % 5] - 1);
        if (T::abs(d1) > worst) worst = T::abs(d1);
        if (T::abs(d2) > worst) worst = T::abs(d2);
    }
    return worst;
}

/// (prod a_i, sum a_i + 3); both equal the invariant I on the nose.
template <class S>
std::pair<S, S> monodromy_check(const Coefficients<S>& c) {
    S prod(1), sum(0);
    for (const auto& v : c.a) {
        prod *= v;
        sum += v;
    }
    return {prod, S(sum + 3)};
}

}  // namespace evolute
