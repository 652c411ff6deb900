#include "evolute/levelset.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace evolute {

namespace {

constexpr double kSweepHalfWidth = 50.0;

// Quadratic-in-y coefficients: (x+1) y^2 + ((x+1)(x+2) - r x) y + (x+1)^2.
struct YQuadratic {
    double a, b, c;
    explicit YQuadratic(double r, double x)
        : a(x + 1), b((x + 1) * (x + 2) - r * x), c((x + 1) * (x + 1)) {}
    double disc() const { return b * b - 4 * a * c; }
};

double bisect(double lo, double hi, auto&& f) {
    double flo = f(lo);
    for (int it = 0; it < 200; ++it) {
        double mid = 0.5 * (lo + hi);
        double fm = f(mid);
        if ((flo <= 0) == (fm <= 0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
        if (hi - lo <= 1e-15 * (1 + std::abs(lo))) break;
    }
    return 0.5 * (lo + hi);
}

}  // namespace

bool SingularLevels::contains(double r, double tol) const {
    for (double s : all())
        if (std::abs(r - s) <= tol * (1 + std::abs(s))) return true;
    return false;
}

SingularLevels singular_levels() {
    // roots of r^2 - 11 r - 1 = 0
    double disc = 11.0 * 11.0 + 4.0;
    double sq = std::sqrt(disc);
    double rp = 0.5 * (11.0 + sq);
    double rm = 0.5 * (11.0 - sq);  // = -1/rp, no cancellation at this scale
    return SingularLevels{rm, rp};
}

std::vector<SingularWitness> singular_witnesses() {
    auto lv = singular_levels();
    std::vector<SingularWitness> out;

    // r = 0: the curve degenerates to three lines; Newton on (F_x, F_y)
    // from a nearby seed lands on a line crossing.
    {
        double x = -0.9, y = -0.9, r = 0.0;
        for (int it = 0; it < 100; ++it) {
            auto g = level_F_grad(x, y, r);
            // Jacobian of the gradient (Hessian of F)
            double fxx = 2 * (y + 1);
            double fyy = 2 * (x + 1);
            double fxy = 2 * x + 2 * y + 3 - r;
            double det = fxx * fyy - fxy * fxy;
            if (det == 0) break;
            x -= (g[0] * fyy - g[1] * fxy) / det;
            y -= (g[1] * fxx - g[0] * fxy) / det;
        }
        auto g = level_F_grad(x, y, r);
        double res = std::max({std::abs(level_F(x, y, r)), std::abs(g[0]), std::abs(g[1])});
        out.push_back({r, x, y, res});
    }

    // r = r-+: the singular point sits on the diagonal; solve F_x(x,x) = 0.
    for (double r : {lv.r_minus, lv.r_plus}) {
        double x = r > 0 ? 1.6 : -0.6;
        for (int it = 0; it < 100; ++it) {
            double g = (x + 1) * (3 * x + 2) - r * x;  // F_x on the diagonal
            double dg = 6 * x + 5 - r;
            x -= g / dg;
        }
        auto g = level_F_grad(x, x, r);
        double res = std::max({std::abs(level_F(x, x, r)), std::abs(g[0]), std::abs(g[1])});
        out.push_back({r, x, x, res});
    }
    return out;
}

std::vector<double> level_y_roots(double r, double x) {
    YQuadratic q(r, x);
    if (q.a == 0.0) {
        // x = -1 exactly: r y = 0
        if (r == 0.0) return {};
        return {0.0};
    }
    double disc = q.disc();
    if (disc < 0) return {};
    double sq = std::sqrt(disc);
    double qq = -0.5 * (q.b + (q.b >= 0 ? sq : -sq));
    double r1, r2;
    if (qq == 0.0) {
        r1 = r2 = -q.b / (2 * q.a);
    } else {
        r1 = qq / q.a;
        r2 = q.c / qq;
    }
    if (r1 > r2) std::swap(r1, r2);
    return {r1, r2};
}

std::optional<std::array<int, 2>> Component::quadrant() const {
    int sx = 0, sy = 0;
    for (const auto& p : samples) {
        if (std::isnan(p[0])) continue;
        int cx = p[0] > 0 ? 1 : (p[0] < 0 ? -1 : 0);
        int cy = p[1] > 0 ? 1 : (p[1] < 0 ? -1 : 0);
        if (cx == 0 || cy == 0) return std::nullopt;
        if (sx == 0) {
            sx = cx;
            sy = cy;
        } else if (sx != cx || sy != cy) {
            return std::nullopt;
        }
    }
    if (sx == 0) return std::nullopt;
    return std::array<int, 2>{sx, sy};
}

const Component* LevelCurve::unbounded() const {
    for (const auto& c : components)
        if (c.kind == ComponentKind::unbounded) return &c;
    return nullptr;
}

const Component* LevelCurve::bounded() const {
    for (const auto& c : components)
        if (c.kind == ComponentKind::bounded) return &c;
    return nullptr;
}

LevelCurve sample_level_curve(double r, std::size_t n_sweep) {
    if (singular_levels().contains(r))
        throw SingularLevel("E_r is singular at r = " + std::to_string(r));
    if (n_sweep < 3) n_sweep = 3;

    LevelCurve out;
    out.r = r;

    auto disc_at = [r](double x) { return YQuadratic(r, x).disc(); };

    // Locate discriminant sign changes on the sweep grid.
    std::vector<double> grid(n_sweep);
    for (std::size_t i = 0; i < n_sweep; ++i)
        grid[i] = -kSweepHalfWidth + 2 * kSweepHalfWidth * double(i) / double(n_sweep - 1);
    std::vector<double> roots;
    for (std::size_t i = 0; i + 1 < n_sweep; ++i) {
        double d0 = disc_at(grid[i]), d1 = disc_at(grid[i + 1]);
        if ((d0 <= 0) != (d1 <= 0)) roots.push_back(bisect(grid[i], grid[i + 1], disc_at));
    }

    // Support intervals of the curve inside the sweep window.
    std::vector<std::array<double, 2>> intervals;
    {
        std::vector<double> cuts = roots;
        cuts.insert(cuts.begin(), -kSweepHalfWidth);
        cuts.push_back(kSweepHalfWidth);
        for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
            double mid = 0.5 * (cuts[i] + cuts[i + 1]);
            if (disc_at(mid) > 0) intervals.push_back({cuts[i], cuts[i + 1]});
        }
    }

    Component unbounded;
    unbounded.kind = ComponentKind::unbounded;
    unbounded.basepoint = {-1.0, 0.0};
    unbounded.x_min = -std::numeric_limits<double>::infinity();
    unbounded.x_max = std::numeric_limits<double>::infinity();
    const double nan = std::numeric_limits<double>::quiet_NaN();

    for (const auto& iv : intervals) {
        bool touches_edge = iv[0] <= -kSweepHalfWidth + 1e-12 || iv[1] >= kSweepHalfWidth - 1e-12;
        bool has_asymptote = iv[0] < -1.0 && -1.0 < iv[1];
        bool bounded_piece = !touches_edge && !has_asymptote;

        // Sample density: sweep spacing, refined so narrow ovals still get a
        // usable polyline.
        std::size_t n_pts = std::max<std::size_t>(
            33, static_cast<std::size_t>((iv[1] - iv[0]) / (2 * kSweepHalfWidth) *
                                         double(n_sweep)));
        std::vector<std::array<double, 2>> lower, upper;
        for (std::size_t i = 0; i <= n_pts; ++i) {
            double x = iv[0] + (iv[1] - iv[0]) * double(i) / double(n_pts);
            auto ys = level_y_roots(r, x);
            if (ys.empty()) continue;
            if (ys.size() == 1) {
                lower.push_back({x, ys[0]});
                continue;
            }
            lower.push_back({x, ys[0]});
            upper.push_back({x, ys[1]});
        }
        if (bounded_piece) {
            Component oval;
            oval.kind = ComponentKind::bounded;
            oval.x_min = iv[0];
            oval.x_max = iv[1];
            // closed polyline: lower branch left->right, upper branch back
            oval.samples = lower;
            oval.samples.insert(oval.samples.end(), upper.rbegin(), upper.rend());
            if (!lower.empty()) oval.samples.push_back(lower.front());
            // min-x basepoint: double root at the left diskriminant root
            double ymid = -YQuadratic(r, iv[0]).b / (2 * YQuadratic(r, iv[0]).a);
            oval.basepoint = {iv[0], ymid};
            out.components.push_back(std::move(oval));
        } else {
            // branches of the single unbounded projective component; split
            // polylines at the x = -1 asymptote
            auto push_branch = [&](const std::vector<std::array<double, 2>>& br) {
                if (br.empty()) return;
                bool first = true;
                std::array<double, 2> prev{};
                for (const auto& p : br) {
                    // split where the branch jumps across the x = -1 asymptote
                    if (!first && ((prev[0] + 1) * (p[0] + 1) < 0 ||
                                   std::abs(p[1] - prev[1]) > 5 + std::abs(prev[1])))
                        unbounded.samples.push_back({nan, nan});
                    unbounded.samples.push_back(p);
                    prev = p;
                    first = false;
                }
                unbounded.samples.push_back({nan, nan});
            };
            push_branch(lower);
            push_branch(upper);
        }
    }
    out.components.insert(out.components.begin(), std::move(unbounded));
    return out;
}

}  // namespace evolute
