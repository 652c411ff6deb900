#pragma once

#include <array>

#include "evolute/hom_triple.hpp"

namespace evolute {

/// Projective transformation as an unnormalized nonsingular 3x3 matrix,
/// row-major. Determinant is checked lazily by the operations that need it.
template <class S>
struct ProjMap {
    std::array<S, 9> m{};

    static ProjMap identity() {
        ProjMap M;
        M.m = {S(1), S(0), S(0), S(0), S(1), S(0), S(0), S(0), S(1)};
        return M;
    }

    S det() const {
        return S(m[0] * (m[4] * m[8] - m[5] * m[7]) -
                 m[1] * (m[3] * m[8] - m[5] * m[6]) +
                 m[2] * (m[3] * m[7] - m[4] * m[6]));
    }

    /// Adjugate (transpose of cofactors): the inverse up to scale.
    ProjMap adjugate() const {
        ProjMap A;
        A.m = {S(m[4] * m[8] - m[5] * m[7]), S(m[2] * m[7] - m[1] * m[8]), S(m[1] * m[5] - m[2] * m[4]),
               S(m[5] * m[6] - m[3] * m[8]), S(m[0] * m[8] - m[2] * m[6]), S(m[2] * m[3] - m[0] * m[5]),
               S(m[3] * m[7] - m[4] * m[6]), S(m[1] * m[6] - m[0] * m[7]), S(m[0] * m[4] - m[1] * m[3])};
        return A;
    }

    /// Cofactor matrix (adjugate transpose): carries lines, up to scale.
    ProjMap cofactor() const {
        ProjMap C = adjugate();
        std::swap(C.m[1], C.m[3]);
        std::swap(C.m[2], C.m[6]);
        std::swap(C.m[5], C.m[7]);
        return C;
    }
};

template <class S>
ProjMap<S> compose(const ProjMap<S>& A, const ProjMap<S>& B) {
    ProjMap<S> C;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            C.m[3 * i + j] = S(A.m[3 * i + 0] * B.m[0 + j] + A.m[3 * i + 1] * B.m[3 + j] +
                               A.m[3 * i + 2] * B.m[6 + j]);
    return C;
}

/// Applies the map. Points transform by M; lines by the inverse-transpose,
/// which up to scale is the cofactor matrix.
template <class S>
HomTriple<S> apply_map(const ProjMap<S>& M, const HomTriple<S>& p) {
    const ProjMap<S>* mat = &M;
    ProjMap<S> cof;
    if (p.tag == Interp::line) {
        cof = M.cofactor();
        mat = &cof;
    }
    const auto& m = mat->m;
    return HomTriple<S>(S(m[0] * p.a + m[1] * p.b + m[2] * p.c),
                        S(m[3] * p.a + m[4] * p.b + m[5] * p.c),
                        S(m[6] * p.a + m[7] * p.b + m[8] * p.c), p.tag);
}

namespace detail {

/// Matrix whose columns are c_i * t_i with [t1 t2 t3] c = t4; carries the
/// standard basis 4-tuple to t1..t4.
template <class S>
ProjMap<S> basis_map(const std::array<HomTriple<S>, 4>& t) {
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            for (int k = j + 1; k < 4; ++k)
                if (collinear(t[i], t[j], t[k]))
                    throw DegenerateInput("correspondence tuple has a collinear triple");
    // Cramer against the matrix with columns t1, t2, t3.
    S d = det3(t[0], t[1], t[2]);
    S c1 = S(det3(t[3], t[1], t[2]) / d);
    S c2 = S(det3(t[0], t[3], t[2]) / d);
    S c3 = S(det3(t[0], t[1], t[3]) / d);
    ProjMap<S> M;
    M.m = {S(c1 * t[0].a), S(c2 * t[1].a), S(c3 * t[2].a),
           S(c1 * t[0].b), S(c2 * t[1].b), S(c3 * t[2].b),
           S(c1 * t[0].c), S(c2 * t[1].c), S(c3 * t[2].c)};
    return M;
}

}  // namespace detail

/// The unique projective map (up to scale) carrying src_i to dst_i for two
/// general-position 4-tuples.
template <class S>
ProjMap<S> transform_from_correspondence(const std::array<HomTriple<S>, 4>& src,
                                         const std::array<HomTriple<S>, 4>& dst) {
    ProjMap<S> Ms = detail::basis_map(src);
    ProjMap<S> Md = detail::basis_map(dst);
    return compose(Md, Ms.adjugate());
}

}  // namespace evolute
