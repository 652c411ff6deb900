#pragma once

#include <cstddef>
#include <vector>

#include "evolute/proj_map.hpp"

namespace evolute {

/// Cyclically ordered vertex list in RP^2. Indices are taken mod k.
template <class S>
struct Polygon {
    std::vector<HomTriple<S>> vertices;

    Polygon() = default;
    explicit Polygon(std::vector<HomTriple<S>> v) : vertices(std::move(v)) {}

    std::size_t k() const { return vertices.size(); }

    const HomTriple<S>& vertex(std::ptrdiff_t i) const {
        std::ptrdiff_t n = static_cast<std::ptrdiff_t>(vertices.size());
        return vertices[static_cast<std::size_t>(((i % n) + n) % n)];
    }

    /// Edge i: the line through V_i and V_{i+1}.
    HomTriple<S> edge(std::ptrdiff_t i) const { return cross(vertex(i), vertex(i + 1)); }

    bool consecutive_vertices_distinct() const {
        for (std::size_t i = 0; i < k(); ++i)
            if (scale_equivalent(vertex(static_cast<std::ptrdiff_t>(i)),
                                 vertex(static_cast<std::ptrdiff_t>(i) + 1)))
                return false;
        return true;
    }

    /// Degenerate: some three consecutive vertices collinear (or coincident).
    bool degenerate() const {
        if (!consecutive_vertices_distinct()) return true;
        for (std::size_t i = 0; i < k(); ++i) {
            auto j = static_cast<std::ptrdiff_t>(i);
            if (collinear(vertex(j), vertex(j + 1), vertex(j + 2))) return true;
        }
        return false;
    }

    /// Cyclic relabeling: vertex i of the result is vertex i+offset of *this.
    Polygon relabeled(std::ptrdiff_t offset) const {
        Polygon out;
        out.vertices.reserve(k());
        for (std::size_t i = 0; i < k(); ++i)
            out.vertices.push_back(vertex(static_cast<std::ptrdiff_t>(i) + offset));
        return out;
    }
};

template <class S>
Polygon<S> apply_map(const ProjMap<S>& M, const Polygon<S>& P) {
    Polygon<S> out;
    out.vertices.reserve(P.k());
    for (const auto& v : P.vertices) out.vertices.push_back(apply_map(M, v));
    return out;
}

}  // namespace evolute
