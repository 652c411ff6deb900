#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "evolute/scalar.hpp"

namespace evolute {

/// Homogenization of (x+1)(y+1)(x+y+1) - r x y:
///   Q = x^2 y + x y^2 + x^2 z + y^2 z + (3-r) x y z + 2 x z^2 + 2 y z^2 + z^3.
template <class S>
S homogeneous_Q(const S& x, const S& y, const S& z, const S& r) {
    return S(x * x * y + x * y * y + x * x * z + y * y * z + (3 - r) * x * y * z +
             2 * x * z * z + 2 * y * z * z + z * z * z);
}

/// Affine level function F(x, y) = (x+1)(y+1)(x+y+1) - r x y.
inline double level_F(double x, double y, double r) {
    return (x + 1) * (y + 1) * (x + y + 1) - r * x * y;
}

inline std::array<double, 2> level_F_grad(double x, double y, double r) {
    return {(y + 1) * (2 * x + y + 2) - r * y, (x + 1) * (x + 2 * y + 2) - r * x};
}

/// Levels at which E_r is singular: 0 and the roots of r^2 - 11 r - 1.
struct SingularLevels {
    double r_minus, r_plus;
    std::array<double, 3> all() const { return {0.0, r_minus, r_plus}; }
    bool contains(double r, double tol = 1e-9) const;
};

SingularLevels singular_levels();

/// A located point with F = 0 and grad F = 0 on a singular level.
struct SingularWitness {
    double r;
    double x, y;
    double residual;  // max(|F|, |F_x|, |F_y|)
};

/// One witness per singular level, found by root-finding.
std::vector<SingularWitness> singular_witnesses();

/// The Hamiltonian field of I for the area form dx dy/(xy):
///   X_I = ( (1+x)(1+x-y^2)/y,  (1+y)(-1-y+x^2)/x ).
template <class S>
std::array<S, 2> hamiltonian_field(const S& x, const S& y) {
    using T = scalar_traits<S>;
    if (T::is_zero(x, S(1 + T::abs(y))) || T::is_zero(y, S(1 + T::abs(x))))
        throw OnAxis("X_I undefined on the coordinate axes");
    return {S((1 + x) * (1 + x - y * y) / y), S((1 + y) * (-1 - y + x * x) / x)};
}

enum class ComponentKind { bounded, unbounded };

struct Component {
    ComponentKind kind = ComponentKind::unbounded;
    /// Affine sweep samples; arcs of the unbounded component are separated by
    /// NaN sentinels so plots do not bridge the asymptotes.
    std::vector<std::array<double, 2>> samples;
    double x_min = 0, x_max = 0;
    std::array<double, 2> basepoint{};
    std::optional<double> period;

    /// Sign pair (sx, sy) with +-1 entries when all samples share one open
    /// quadrant; nullopt otherwise.
    std::optional<std::array<int, 2>> quadrant() const;
};

struct LevelCurve {
    double r = 0;
    bool singular = false;
    std::vector<Component> components;

    const Component* unbounded() const;
    const Component* bounded() const;
};

/// The two y-roots over a fixed x (the curve is quadratic in y), smallest
/// first; empty when the discriminant is negative. Stable near double roots.
std::vector<double> level_y_roots(double r, double x);

/// x-sweep sampler and component classifier. Sweeps [-50, 50] with n points
/// (default 2001) plus adaptive refinement near discriminant sign changes.
/// Throws SingularLevel for r in the singular set.
LevelCurve sample_level_curve(double r, std::size_t n_sweep = 2001);

}  // namespace evolute
