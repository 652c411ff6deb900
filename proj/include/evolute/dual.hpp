#pragma once

#include "evolute/scalar.hpp"

namespace evolute {

/// Forward-mode dual number with two partials (d/dx, d/dy). Arithmetic obeys
/// the product and quotient rules exactly over an exact scalar.
template <class S>
struct DualScalar {
    S v{}, dx{}, dy{};

    DualScalar() = default;
    DualScalar(S value) : v(std::move(value)), dx(S(0)), dy(S(0)) {}
    DualScalar(S value, S px, S py) : v(std::move(value)), dx(std::move(px)), dy(std::move(py)) {}

    static DualScalar var_x(S value) { return DualScalar(std::move(value), S(1), S(0)); }
    static DualScalar var_y(S value) { return DualScalar(std::move(value), S(0), S(1)); }
};

template <class S>
DualScalar<S> operator+(const DualScalar<S>& a, const DualScalar<S>& b) {
    return {S(a.v + b.v), S(a.dx + b.dx), S(a.dy + b.dy)};
}
template <class S>
DualScalar<S> operator-(const DualScalar<S>& a, const DualScalar<S>& b) {
    return {S(a.v - b.v), S(a.dx - b.dx), S(a.dy - b.dy)};
}
template <class S>
DualScalar<S> operator-(const DualScalar<S>& a) {
    return {S(-a.v), S(-a.dx), S(-a.dy)};
}
template <class S>
DualScalar<S> operator*(const DualScalar<S>& a, const DualScalar<S>& b) {
    return {S(a.v * b.v), S(a.dx * b.v + a.v * b.dx), S(a.dy * b.v + a.v * b.dy)};
}
template <class S>
DualScalar<S> operator/(const DualScalar<S>& a, const DualScalar<S>& b) {
    S w = S(b.v * b.v);
    return {S(a.v / b.v), S((a.dx * b.v - a.v * b.dx) / w), S((a.dy * b.v - a.v * b.dy) / w)};
}

template <class S> DualScalar<S> operator+(const S& a, const DualScalar<S>& b) { return DualScalar<S>(a) + b; }
template <class S> DualScalar<S> operator+(const DualScalar<S>& a, const S& b) { return a + DualScalar<S>(b); }
template <class S> DualScalar<S> operator-(const S& a, const DualScalar<S>& b) { return DualScalar<S>(a) - b; }
template <class S> DualScalar<S> operator-(const DualScalar<S>& a, const S& b) { return a - DualScalar<S>(b); }
template <class S> DualScalar<S> operator*(const S& a, const DualScalar<S>& b) { return DualScalar<S>(a) * b; }
template <class S> DualScalar<S> operator*(const DualScalar<S>& a, const S& b) { return a * DualScalar<S>(b); }
template <class S> DualScalar<S> operator/(const S& a, const DualScalar<S>& b) { return DualScalar<S>(a) / b; }
template <class S> DualScalar<S> operator/(const DualScalar<S>& a, const S& b) { return a / DualScalar<S>(b); }

template <class S> DualScalar<S> operator+(int a, const DualScalar<S>& b) { return DualScalar<S>(S(a)) + b; }
template <class S> DualScalar<S> operator+(const DualScalar<S>& a, int b) { return a + DualScalar<S>(S(b)); }
template <class S> DualScalar<S> operator-(int a, const DualScalar<S>& b) { return DualScalar<S>(S(a)) - b; }
template <class S> DualScalar<S> operator-(const DualScalar<S>& a, int b) { return a - DualScalar<S>(S(b)); }
template <class S> DualScalar<S> operator*(int a, const DualScalar<S>& b) { return DualScalar<S>(S(a)) * b; }
template <class S> DualScalar<S> operator*(const DualScalar<S>& a, int b) { return a * DualScalar<S>(S(b)); }

}  // namespace evolute
