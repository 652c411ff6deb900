#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "evolute/levelset.hpp"

namespace evolute {

struct FlowOptions {
    double tol = 1e-10;       // local error target per step
    double event_tol = 1e-12; // event-time refinement tolerance
};

/// Flow of the Hamiltonian field X_I on one completed component of E_r.
///
/// The integration runs in four projective charts so the loop closes through
/// the three points at infinity, with per-step projection back onto the
/// curve. The basepoint (theta = 0) is the completion point (-1, 0) on the
/// unbounded component and the minimal-x point on a bounded one.
class ComponentFlow {
public:
    ComponentFlow(double r, ComponentKind kind, FlowOptions opt = {});

    double r() const { return r_; }
    ComponentKind kind() const { return kind_; }

    /// Total flow time around the completed component.
    double period();

    /// Positions at the given theta values (sorted ascending, within [0, lambda)).
    std::vector<std::array<double, 2>> points_at(const std::vector<double>& thetas);

    /// Flow time from the basepoint to q, in [0, lambda). q must lie on this
    /// component (NotOnCurve / WrongComponent otherwise).
    double theta_of(std::array<double, 2> q);

    /// Signed time from p to q along the flow orientation, in [0, lambda).
    double flow_time(std::array<double, 2> p, std::array<double, 2> q);

    /// |F(q)|-style residual used for the on-curve check.
    double curve_residual(std::array<double, 2> q) const;

    std::array<double, 2> basepoint() const { return base_; }

private:
    double r_;
    ComponentKind kind_;
    FlowOptions opt_;
    std::array<double, 2> base_{};
    std::array<double, 2> seed_{};
    double seed_dt_ = 0;     // flow time from basepoint to seed
    double lambda_ = -1;

    friend struct FlowImpl;
};

struct ConjugacySample {
    double x = 0, y = 0;
    double theta = 0;
    double theta_image = 0;      // theta(T^2 p)
    double residual = 0;         // |theta_image + 4 theta - c| mod lambda, / lambda
    double diff_residual = 0;    // relative error of d(T^2) X_I = -4 X_I
    bool undefined = false;      // T^2 hit a degeneracy at this sample
};

struct ConjugacyReport {
    double r = 0;
    double lambda = 0;
    /// Constant c with theta(T^2 p) = -4 theta(p) + c mod lambda, estimated
    /// from the samples. The completed map fixes theta* = c/5, and theta
    /// recentered there satisfies theta(T^2 p) = -4 theta(p) exactly.
    double offset = 0;
    double offset_over_lambda = 0;
    std::size_t tested = 0, skipped = 0;
    double worst_residual = 0;
    double worst_diff_residual = 0;
    bool passed = false;
    std::vector<ConjugacySample> samples;
};

/// Samples the unbounded component of E_r and verifies that T^2 acts as
/// multiplication by -4 on the flow-time circle, both through theta values
/// and through the differential d(T^2) X_I = -4 X_I.
ConjugacyReport verify_conjugacy(double r, std::size_t n_samples, double tol,
                                 FlowOptions opt = {});

struct EscapeSample {
    double x = 0, y = 0;         // point on the bounded component
    double ix = 0, iy = 0;       // T^2 image
    bool left_quadrant = false;  // image escaped the oval's quadrant
    double image_theta = -1;     // theta of the image on the unbounded component
};

struct EscapeReport {
    double r = 0;
    std::size_t tested = 0;
    bool all_escaped = false;
    std::vector<EscapeSample> samples;
};

/// Verifies that T^2 maps the bounded component of E_r into the unbounded
/// one: the image leaves the oval's quadrant and has a well-defined theta on
/// the unbounded component.
EscapeReport bounded_escape_check(double r, std::size_t n_samples, FlowOptions opt = {});

}  // namespace evolute
