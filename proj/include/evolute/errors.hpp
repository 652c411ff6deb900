#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace evolute {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Cross product of scale-equivalent inputs (or other vanishing result).
struct ZeroResult : Error {
    using Error::Error;
};

/// A 4-tuple with a collinear triple, or a polygon violating its invariants.
struct DegenerateInput : Error {
    using Error::Error;
};

/// Affine chart requested for a point on z = 0.
struct AtInfinity : Error {
    using Error::Error;
};

/// Moduli on one or more degeneracy loci; carries the violated locus names.
struct DegenerateModuli : Error {
    std::vector<std::string> loci;
    explicit DegenerateModuli(std::vector<std::string> l)
        : Error("degenerate moduli: " + join(l)), loci(std::move(l)) {}
    static std::string join(const std::vector<std::string>& v) {
        std::string s;
        for (const auto& e : v) {
            if (!s.empty()) s += ", ";
            s += e;
        }
        return s;
    }
};

/// Rational map evaluated where a denominator factor vanishes; carries all
/// vanishing factors, not just the first.
struct MapUndefined : Error {
    std::vector<std::string> factors;
    explicit MapUndefined(std::vector<std::string> f)
        : Error("map undefined, vanishing factors: " + DegenerateModuli::join(f)),
          factors(std::move(f)) {}
};

/// Evolute image undefined or collapsed (coincident normals/vertices).
struct DegenerateImage : Error {
    using Error::Error;
};

/// Lift with a vanishing consecutive-triple determinant.
struct DegenerateLift : Error {
    using Error::Error;
};

/// Exact-mode unimodular rescaling would need an irrational cube root.
struct InexactCubeRoot : Error {
    using Error::Error;
};

struct DivisionByZero : Error {
    using Error::Error;
};

/// Level parameter r at which E_r is singular.
struct SingularLevel : Error {
    using Error::Error;
};

struct NotOnCurve : Error {
    using Error::Error;
};

struct WrongComponent : Error {
    using Error::Error;
};

/// Hamiltonian field evaluated on a coordinate axis.
struct OnAxis : Error {
    using Error::Error;
};

/// f(t) = (2t-1)/(t^2-1) evaluated at t = +-1 in strict affine mode.
struct PoleAtInput : Error {
    using Error::Error;
};

struct IOError : Error {
    using Error::Error;
};

}  // namespace evolute
