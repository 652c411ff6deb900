#pragma once

#include <optional>
#include <string>

#include "evolute/polygon.hpp"

namespace evolute {

/// Projective normal of the edge V2V3:
///   n(V1,V2,V3,V4) = V1' x V2',
///   V1' = (V1 x V3) x (V2 x V4),   V2' = (V1 x V2) x (V3 x V4).
/// Any vanishing intermediate cross product propagates as ZeroResult.
template <class S>
HomTriple<S> projective_normal(const HomTriple<S>& V1, const HomTriple<S>& V2,
                               const HomTriple<S>& V3, const HomTriple<S>& V4) {
    HomTriple<S> Vp1 = cross(cross(V1, V3), cross(V2, V4));
    HomTriple<S> Vp2 = cross(cross(V1, V2), cross(V3, V4));
    HomTriple<S> n = cross(Vp1, Vp2);
    n.tag = Interp::line;
    return n;
}

/// Normal of edge V_i V_{i+1}, built from the window V_{i-1}..V_{i+2}.
template <class S>
HomTriple<S> edge_normal(const Polygon<S>& P, std::ptrdiff_t i) {
    return projective_normal(P.vertex(i - 1), P.vertex(i), P.vertex(i + 1), P.vertex(i + 2));
}

/// The evolute T(P): vertex i is n_i x n_{i+1}, where n_i is the normal of
/// edge V_i V_{i+1}. Throws DegenerateImage when a normal is undefined, two
/// consecutive normals coincide, or consecutive image vertices coincide (the
/// regular pentagon collapses this way: all five normals are concurrent).
template <class S>
Polygon<S> evolute(const Polygon<S>& P) {
    if (P.k() < 5) throw DegenerateInput("evolute needs k >= 5");
    if (P.degenerate()) throw DegenerateInput("degenerate polygon");
    const std::ptrdiff_t k = static_cast<std::ptrdiff_t>(P.k());
    std::vector<HomTriple<S>> n;
    n.reserve(P.k());
    for (std::ptrdiff_t i = 0; i < k; ++i) {
        try {
            n.push_back(edge_normal(P, i));
        } catch (const ZeroResult&) {
            throw DegenerateImage("normal of edge " + std::to_string(i) + " undefined");
        }
    }
    Polygon<S> out;
    out.vertices.reserve(P.k());
    for (std::ptrdiff_t i = 0; i < k; ++i) {
        const auto& ni = n[static_cast<std::size_t>(i)];
        const auto& nj = n[static_cast<std::size_t>((i + 1) % k)];
        if (scale_equivalent(ni, nj))
            throw DegenerateImage("consecutive normals coincide at edge " + std::to_string(i));
        out.vertices.push_back(cross(ni, nj));
        out.vertices.back().tag = Interp::point;
    }
    if (!out.consecutive_vertices_distinct())
        throw DegenerateImage("image has coincident consecutive vertices (concurrent normals)");
    return out;
}

template <class S>
struct EvoluteOrbit {
    std::vector<Polygon<S>> polygons;        // P, T(P), ..., up to the first failure
    std::optional<std::size_t> failed_after; // index of the last valid polygon
    std::string failure;
};

/// P, T(P), ..., T^n(P); stops early with a degeneracy record.
template <class S>
EvoluteOrbit<S> iterate_evolute(const Polygon<S>& P, std::size_t n) {
    EvoluteOrbit<S> orbit;
    orbit.polygons.push_back(P);
    for (std::size_t i = 0; i < n; ++i) {
        try {
            orbit.polygons.push_back(evolute(orbit.polygons.back()));
        } catch (const Error& e) {
            orbit.failed_after = i;
            orbit.failure = e.what();
            break;
        }
    }
    return orbit;
}

}  // namespace evolute
