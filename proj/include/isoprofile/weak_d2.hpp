#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "isoprofile/errors.hpp"
#include "isoprofile/interpolation.hpp"
#include "isoprofile/numerics.hpp"

namespace isoprofile {

enum class ineq_sense { pointwise, viscosity, distributional, concavity };
enum class verdict { pass, fail };

inline const char* to_string(ineq_sense s) {
    switch (s) {
    case ineq_sense::pointwise: return "pointwise";
    case ineq_sense::viscosity: return "viscosity";
    case ineq_sense::distributional: return "distributional";
    default: return "concavity";
    }
}

inline const char* to_string(verdict v) { return v == verdict::pass ? "pass" : "fail"; }

/// Outcome of certifying a second-order inequality in one weak sense.
/// worst_residual is signed: positive values measure the violation.
struct weak_ineq_report {
    ineq_sense sense;
    verdict v;
    double worst_residual;
    std::size_t worst_location;
    double tolerance;
    std::vector<double> h_schedule;
    bool interpolated; // off-node probes were needed (possible residual source)
    std::string note;

    bool passed() const { return v == verdict::pass; }
};

using value_map = std::function<double(double)>;

/// Symmetric second difference (f(x+h) + f(x-h) - 2 f(x)) / h^2.
/// Off-grid points go through the profile interpolant.
inline double second_difference(const grid_function& f, double x, double h) {
    if (!(h > 0.0))
        throw std::invalid_argument("second_difference: step must be positive");
    const double slack = 1e-12 * std::max(1.0, f.span());
    if (x - h < f.x_min() - slack || x + h > f.x_max() + slack)
        throw out_of_range("second_difference: window leaves the domain");
    const double fp = f.value_preferring_nodes(x + h);
    const double fm = f.value_preferring_nodes(x - h);
    const double fc = f.value_preferring_nodes(x);
    return (fp + fm - 2.0 * fc) / (h * h);
}

namespace detail {

inline double min_adjacent_spacing(const grid_function& f, double x) {
    const std::size_t i = f.cell_index(x);
    double s = f.xs()[i + 1] - f.xs()[i];
    if (i > 0)
        s = std::min(s, f.xs()[i] - f.xs()[i - 1]);
    if (i + 2 < f.size())
        s = std::min(s, f.xs()[i + 2] - f.xs()[i + 1]);
    return s;
}

// Geometric schedule h0/2^j, j = 0..12, with h0 = min(span/8, distance to the
// boundary) and steps below the local grid resolution discarded: finer steps
// would only sample the interpolant.
inline std::vector<double> h_schedule(const grid_function& f, double x, int halvings = 12) {
    const double h0 = std::min({f.span() / 8.0, x - f.x_min(), f.x_max() - x});
    const double floor_h = 0.999 * min_adjacent_spacing(f, x);
    std::vector<double> hs;
    double h = h0;
    for (int j = 0; j <= halvings && h > 0.0; ++j, h *= 0.5) {
        if (h < floor_h && !hs.empty())
            break;
        hs.push_back(h);
    }
    return hs;
}

} // namespace detail

/// Limsup/liminf estimate of the second difference quotient over a geometric
/// step schedule. value is the max (upper) or min (lower) over the final
/// steps; order is a Richardson convergence-rate estimate; diverging flags
/// schedules whose increments keep growing (e.g. a kink, where d_h^2 ~ c/h).
struct d2_estimate {
    double value;
    double h_smallest;
    double order;
    bool diverging;
    std::vector<double> h_used;
};

namespace detail {

inline d2_estimate d2_over_schedule(const grid_function& f, double x, bool upper) {
    const auto hs = h_schedule(f, x);
    std::vector<double> d(hs.size());
    for (std::size_t j = 0; j < hs.size(); ++j)
        d[j] = second_difference(f, x, hs[j]);
    const std::size_t tail = std::min<std::size_t>(4, d.size());
    double v = d[d.size() - tail];
    for (std::size_t j = d.size() - tail; j < d.size(); ++j)
        v = upper ? std::max(v, d[j]) : std::min(v, d[j]);
    double order = 0.0;
    bool diverging = false;
    if (d.size() >= 3) {
        const double num = d[d.size() - 2] - d[d.size() - 3];
        const double den = d[d.size() - 1] - d[d.size() - 2];
        const double scale = std::max({std::abs(d.back()), 1.0});
        if (std::abs(den) > 1e-14 * scale) {
            order = std::log2(std::abs(num / den));
            diverging = std::abs(den) >= 1.5 * std::abs(num) && std::abs(den) > 1e-9 * scale;
        }
    }
    return {v, hs.back(), order, diverging, hs};
}

} // namespace detail

inline d2_estimate upper_D2(const grid_function& f, double x) {
    return detail::d2_over_schedule(f, x, true);
}

inline d2_estimate lower_D2(const grid_function& f, double x) {
    return detail::d2_over_schedule(f, x, false);
}

namespace detail {

// tol(h) = atol + 10 h Lip(g o f): certificates declare their slack.
inline double residual_tolerance(const grid_function& f, const value_map& g, double h,
                                 double atol) {
    double lip = 0.0;
    for (std::size_t i = 0; i + 1 < f.size(); ++i) {
        const double dg = std::abs(g(f.ys()[i + 1]) - g(f.ys()[i]));
        lip = std::max(lip, dg / (f.xs()[i + 1] - f.xs()[i]));
    }
    return atol + 10.0 * h * lip;
}

inline bool off_node_probes_needed(const grid_function& f) {
    // Uniform grids keep every probe of the dyadic schedule on nodes.
    const auto& xs = f.xs();
    const double h0 = (xs.back() - xs.front()) / static_cast<double>(xs.size() - 1);
    for (std::size_t i = 0; i + 1 < xs.size(); ++i)
        if (std::abs((xs[i + 1] - xs[i]) - h0) > 1e-9 * std::max(1.0, std::abs(h0)))
            return true;
    return ((f.size() - 1) % 8) != 0;
}

} // namespace detail

/// Pointwise sense: upper second difference quotient <= g(f(x)) at every
/// interior grid point, up to the declared tolerance.
inline weak_ineq_report check_pointwise(const grid_function& f, const value_map& g,
                                        double atol = 1e-6) {
    weak_ineq_report rep{ineq_sense::pointwise, verdict::pass, -infinity, 0, atol, {}, false, {}};
    double h_small = f.span();
    for (std::size_t i = 1; i + 1 < f.size(); ++i) {
        const double x = f.xs()[i];
        const auto est = upper_D2(f, x);
        h_small = std::min(h_small, est.h_smallest);
        const double r = est.value - g(f.ys()[i]);
        if (r > rep.worst_residual) {
            rep.worst_residual = r;
            rep.worst_location = i;
            rep.h_schedule = est.h_used;
        }
    }
    rep.interpolated = detail::off_node_probes_needed(f);
    rep.tolerance = detail::residual_tolerance(f, g, h_small, atol);
    rep.v = rep.worst_residual <= rep.tolerance ? verdict::pass : verdict::fail;
    if (rep.interpolated)
        rep.note = "off-node probes interpolated; possible residual source";
    return rep;
}

/// Variant certifying the opposite bound, upper D2 f >= g(f): used for the
/// subsolution side of the comparison lemma. worst_residual is again signed
/// with positive = violation.
inline weak_ineq_report check_pointwise_lower(const grid_function& f, const value_map& g,
                                              double atol = 1e-6) {
    weak_ineq_report rep{ineq_sense::pointwise, verdict::pass, -infinity, 0, atol, {}, false, {}};
    double h_small = f.span();
    for (std::size_t i = 1; i + 1 < f.size(); ++i) {
        const auto est = upper_D2(f, f.xs()[i]);
        h_small = std::min(h_small, est.h_smallest);
        const double r = g(f.ys()[i]) - est.value;
        if (r > rep.worst_residual) {
            rep.worst_residual = r;
            rep.worst_location = i;
            rep.h_schedule = est.h_used;
        }
    }
    rep.interpolated = detail::off_node_probes_needed(f);
    rep.tolerance = detail::residual_tolerance(f, g, h_small, atol);
    rep.v = rep.worst_residual <= rep.tolerance ? verdict::pass : verdict::fail;
    rep.note = "lower bound variant: certifies upper D2 f >= g(f)";
    return rep;
}

namespace detail {

// Largest curvature a* of a parabola touching f from below at node i within
// the window: a* = min over node pairs (one on each side) of the pairwise
// curvature 2 (D+ - D-) / (d+ - d-), D = (f(y)-f(x))/(y-x). If the window has
// no admissible pair, no touching parabola constrains the point (vacuous).
inline bool extremal_touching_curvature(const grid_function& f, std::size_t i,
                                        std::size_t half_width, double* out) {
    const auto& xs = f.xs();
    const auto& ys = f.ys();
    const std::size_t lo = i > half_width ? i - half_width : 0;
    const std::size_t hi = std::min(f.size() - 1, i + half_width);
    double a_star = infinity;
    bool any = false;
    for (std::size_t r = i + 1; r <= hi; ++r) {
        const double dp = xs[r] - xs[i];
        const double Dp = (ys[r] - ys[i]) / dp;
        for (std::size_t l = lo; l < i; ++l) {
            const double dm = xs[l] - xs[i];
            const double Dm = (ys[l] - ys[i]) / dm;
            a_star = std::min(a_star, 2.0 * (Dp - Dm) / (dp - dm));
            any = true;
        }
    }
    *out = a_star;
    return any;
}

} // namespace detail

/// Viscosity sense: at each interior grid point, the steepest parabola
/// touching f from below over windows of 5, 9 and 17 nodes must satisfy
/// phi''(x) <= g(f(x)) + tol. A point with no admissible touching parabola
/// passes vacuously.
inline weak_ineq_report check_viscosity(const grid_function& f, const value_map& g,
                                        double atol = 1e-6) {
    weak_ineq_report rep{ineq_sense::viscosity, verdict::pass, -infinity, 0, atol, {}, false, {}};
    double h_small = f.span();
    for (std::size_t i = 1; i + 1 < f.size(); ++i) {
        h_small = std::min(h_small, detail::min_adjacent_spacing(f, f.xs()[i]));
        for (std::size_t hw : {2u, 4u, 8u}) {
            double a_star;
            if (!detail::extremal_touching_curvature(f, i, hw, &a_star))
                continue;
            const double r = a_star - g(f.ys()[i]);
            if (r > rep.worst_residual) {
                rep.worst_residual = r;
                rep.worst_location = i;
            }
        }
    }
    rep.h_schedule = {h_small};
    rep.tolerance = detail::residual_tolerance(f, g, h_small, atol);
    rep.v = rep.worst_residual <= rep.tolerance ? verdict::pass : verdict::fail;
    return rep;
}

namespace detail {

// Cubic B-spline bump on [-2, 2]: nonnegative, C^2, integral 1.
inline double bspline3(double t) {
    t = std::abs(t);
    if (t >= 2.0)
        return 0.0;
    if (t >= 1.0) {
        const double u = 2.0 - t;
        return u * u * u / 6.0;
    }
    return 2.0 / 3.0 - t * t + 0.5 * t * t * t;
}

inline double bspline3_d2(double t) {
    const double a = std::abs(t);
    if (a >= 2.0)
        return 0.0;
    if (a >= 1.0)
        return 2.0 - a;
    return -2.0 + 3.0 * a;
}

struct bump {
    double center;
    double radius; // support is [center - radius, center + radius]

    double operator()(double x) const { return bspline3(2.0 * (x - center) / radius); }
    double d2(double x) const {
        const double s = 2.0 / radius;
        return bspline3_d2(s * (x - center)) * s * s;
    }
    double mass() const { return 0.5 * radius; } // integral of the bump
};

// RHS integral of g(f) * phi, cellwise Simpson with cells split at the
// B-spline knots (phi is only C^2 there); f at midpoints by chord.
inline double integrate_g_phi(const grid_function& f, const value_map& g, const bump& phi) {
    const auto& xs = f.xs();
    const auto& ys = f.ys();
    const double lo = phi.center - phi.radius;
    const double hi = phi.center + phi.radius;
    const double knots[5] = {lo, phi.center - 0.5 * phi.radius, phi.center,
                             phi.center + 0.5 * phi.radius, hi};
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
        double a = std::max(xs[i], lo);
        const double b = std::min(xs[i + 1], hi);
        if (a >= b)
            continue;
        const double w = xs[i + 1] - xs[i];
        auto fval = [&](double x) { return ys[i] + (ys[i + 1] - ys[i]) * (x - xs[i]) / w; };
        auto piece = [&](double pa, double pb) {
            const double m = 0.5 * (pa + pb);
            const double s = (pb - pa) / 6.0 *
                             (g(fval(pa)) * phi(pa) + 4.0 * g(fval(m)) * phi(m) +
                              g(fval(pb)) * phi(pb));
            return s;
        };
        for (double knot : knots) {
            if (knot > a && knot < b) {
                total += piece(a, knot);
                a = knot;
            }
        }
        total += piece(a, b);
    }
    return total;
}

} // namespace detail

/// Distributional sense: integral f phi'' <= integral g(f) phi for a fixed
/// dictionary of nonnegative cubic B-spline bumps at three widths and every
/// admissible grid center. The left side pairs phi against the piecewise
/// linear reading of the samples, Sum (delta_i - delta_{i-1}) phi(x_i), which
/// is exact and nonpositive for concave data; residuals are normalized by the
/// bump mass so tolerances match the pointwise sense.
inline weak_ineq_report check_distributional(const grid_function& f, const value_map& g,
                                             double atol = 1e-6) {
    weak_ineq_report rep{ineq_sense::distributional, verdict::pass, -infinity, 0,
                         atol,                       {},            false,     {}};
    const auto& xs = f.xs();
    const auto& ys = f.ys();
    const std::size_t n = f.size();

    std::vector<double> secant(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i)
        secant[i] = (ys[i + 1] - ys[i]) / (xs[i + 1] - xs[i]);

    double h_grid = 0.0;
    for (std::size_t i = 0; i + 1 < n; ++i)
        h_grid = std::max(h_grid, xs[i + 1] - xs[i]);

    const double span = f.span();
    const double radii[3] = {span / 4.0, span / 8.0, span / 16.0};
    bool any = false;
    for (double radius : radii) {
        for (std::size_t c = 1; c + 1 < n; ++c) {
            if (xs[c] - radius < xs.front() || xs[c] + radius > xs.back())
                continue;
            const detail::bump phi{xs[c], radius};
            double lhs = 0.0;
            for (std::size_t i = 1; i + 1 < n; ++i) {
                const double w = phi(xs[i]);
                if (w > 0.0)
                    lhs += (secant[i] - secant[i - 1]) * w;
            }
            const double rhs = detail::integrate_g_phi(f, g, phi);
            const double r = (lhs - rhs) / phi.mass();
            if (r > rep.worst_residual) {
                rep.worst_residual = r;
                rep.worst_location = c;
            }
            any = true;
        }
    }
    rep.h_schedule = {radii[0], radii[1], radii[2]};
    rep.tolerance = detail::residual_tolerance(f, g, h_grid, atol);
    if (!any) {
        rep.worst_residual = 0.0;
        rep.note = "no admissible test bump fits the window";
    }
    rep.v = rep.worst_residual <= rep.tolerance ? verdict::pass : verdict::fail;
    return rep;
}

/// Concavity as a brute-force check of d_h^2 f <= 0 over every grid-aligned
/// symmetric pair (x-h, x, x+h).
inline weak_ineq_report check_concavity(const grid_function& f, double atol = 1e-8) {
    weak_ineq_report rep{ineq_sense::concavity, verdict::pass, -infinity, 0, atol, {}, false, {}};
    const auto& xs = f.xs();
    const auto& ys = f.ys();
    const double eps = 1e-9 * std::max(1.0, f.span());
    for (std::size_t l = 0; l + 2 < xs.size(); ++l) {
        for (std::size_t r = l + 2; r < xs.size(); ++r) {
            const double mid = 0.5 * (xs[l] + xs[r]);
            const std::size_t m = f.node_at(mid, eps);
            if (m == grid_function::npos || m <= l || m >= r)
                continue;
            const double h = 0.5 * (xs[r] - xs[l]);
            const double d = (ys[r] + ys[l] - 2.0 * ys[m]) / (h * h);
            if (d > rep.worst_residual) {
                rep.worst_residual = d;
                rep.worst_location = m;
            }
        }
    }
    if (!std::isfinite(rep.worst_residual))
        rep.worst_residual = 0.0;
    rep.v = rep.worst_residual <= rep.tolerance ? verdict::pass : verdict::fail;
    return rep;
}

/// Inf-convolution f_eps(x) = min_y f(y) + |x-y|^2 / eps over the grid.
/// Semiconcave regularization: f_eps <= f, monotone in eps, uniform
/// convergence as eps -> 0.
inline grid_function inf_convolution(const grid_function& f, double eps) {
    if (!(eps > 0.0))
        throw std::invalid_argument("inf_convolution: eps must be positive");
    const auto& xs = f.xs();
    const auto& ys = f.ys();
    std::vector<double> out(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) {
        double best = infinity;
        for (std::size_t j = 0; j < xs.size(); ++j) {
            const double d = xs[i] - xs[j];
            best = std::min(best, ys[j] + d * d / eps);
        }
        out[i] = best;
    }
    return grid_function(std::vector<double>(xs), std::move(out));
}

/// Convolution with the normalized symmetric B-spline bump of support
/// (-eps, eps), returned on the nodes of the eps-shrunk window.
inline grid_function mollify(const grid_function& f, double eps) {
    if (!(eps > 0.0))
        throw std::invalid_argument("mollify: eps must be positive");
    if (2.0 * eps >= f.span())
        throw window_too_small("mollify: support exceeds half the window");
    std::vector<double> xs, ys;
    for (std::size_t i = 0; i < f.size(); ++i) {
        const double x = f.xs()[i];
        if (x < f.x_min() + eps || x > f.x_max() - eps)
            continue;
        // mollifier rho(s) = (2/eps) B3(2 s / eps), unit mass
        const double v = composite_simpson(
            [&](double s) { return f(x - s) * (2.0 / eps) * detail::bspline3(2.0 * s / eps); },
            -eps, eps, 64);
        xs.push_back(x);
        ys.push_back(v);
    }
    if (xs.size() < 2)
        throw window_too_small("mollify: shrunk window holds fewer than two nodes");
    return grid_function(std::move(xs), std::move(ys));
}

} // namespace isoprofile
