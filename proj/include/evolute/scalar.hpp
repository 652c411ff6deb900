#pragma once

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>

#include <gmpxx.h>

#include "evolute/errors.hpp"

namespace evolute {

/// Exact scalar: arbitrary-precision rational.
using Rat = mpq_class;

/// Parses "p", "-p" or "p/q" into a canonical rational.
inline Rat rat_from_string(const std::string& s) {
    if (s.empty()) throw IOError("empty rational literal");
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    bool seen_digit = false, seen_slash = false;
    for (; i < s.size(); ++i) {
        if (s[i] == '/') {
            if (seen_slash || !seen_digit) throw IOError("bad rational literal: " + s);
            seen_slash = true;
            seen_digit = false;
        } else if (s[i] >= '0' && s[i] <= '9') {
            seen_digit = true;
        } else {
            throw IOError("bad rational literal: " + s);
        }
    }
    if (!seen_digit) throw IOError("bad rational literal: " + s);
    Rat q(s);
    q.canonicalize();
    if (seen_slash && q.get_den() == 0) throw IOError("zero denominator: " + s);
    return q;
}

inline std::string rat_to_string(const Rat& q) {
    return q.get_str();
}

/// Exact rational cube root; returns false when v is not a perfect cube.
inline bool rat_cbrt(const Rat& v, Rat& out) {
    mpz_class num = v.get_num(), den = v.get_den();
    mpz_class rn, rd;
    bool exact_n = mpz_root(rn.get_mpz_t(), num.get_mpz_t(), 3) != 0;
    bool exact_d = mpz_root(rd.get_mpz_t(), den.get_mpz_t(), 3) != 0;
    if (!exact_n || !exact_d) return false;
    out = Rat(rn, rd);
    out.canonicalize();
    return true;
}

template <class S>
struct scalar_traits;

template <>
struct scalar_traits<Rat> {
    static constexpr bool is_exact = true;
    static bool is_zero(const Rat& v, const Rat& = Rat(0)) { return v == 0; }
    static Rat abs(const Rat& v) { return v < 0 ? Rat(-v) : v; }
    static double to_double(const Rat& v) { return v.get_d(); }
    static Rat from_int(long n) { return Rat(n); }
    static std::string str(const Rat& v) { return rat_to_string(v); }
    static const char* mode_name() { return "exact"; }
};

template <>
struct scalar_traits<double> {
    static constexpr bool is_exact = false;
    static constexpr double zero_tol = 1e-12;
    /// Scale-aware zero test: |v| <= tol * scale (scale defaults to 1).
    static bool is_zero(double v, double scale = 1.0) {
        return std::abs(v) <= zero_tol * (scale == 0.0 ? 1.0 : std::abs(scale));
    }
    static double abs(double v) { return std::abs(v); }
    static double to_double(double v) { return v; }
    static double from_int(long n) { return static_cast<double>(n); }
    static std::string str(double v) {
        char buf[40];
        std::snprintf(buf, sizeof buf, "%.17g", v);
        return buf;
    }
    static const char* mode_name() { return "approx"; }
};

}  // namespace evolute
