#pragma once

#include <cmath>
#include <cstddef>
#include <utility>
#include <vector>

#include "isoprofile/errors.hpp"
#include "isoprofile/model_geometry.hpp"
#include "isoprofile/numerics.hpp"

namespace isoprofile {

enum class tube_side { inside, outside };

/// Right-hand side of the two-sided Laplacian bound for the signed distance
/// from a set with mean curvature barrier c. f is the signed distance
/// (negative inside). Both sides reduce to c / (1 + c f / (N-1)) when K = 0
/// and agree at f = 0.
inline double barrier_rhs(const curvature_dimension& cd, double c, double f, tube_side s) {
    const double lam = c / (cd.N - 1);
    double value, denom;
    if (s == tube_side::inside) {
        denom = s_lambda(cd.k, lam, -f);
        value = -(cd.N - 1) * s_lambda_prime(cd.k, lam, -f);
    } else {
        denom = s_lambda(cd.k, -lam, f);
        value = (cd.N - 1) * s_lambda_prime(cd.k, -lam, f);
    }
    if (std::abs(denom) < 1e-12)
        throw singular_point("barrier_rhs: focal point");
    return value / denom;
}

/// Heintze-Karcher perimeter bound for the tube at signed distance t:
/// P0 (s_{k, -sgn(t) c/(N-1)}(|t|))_+^{N-1}. For K = 0 this is the closed
/// form P0 (1 + c t/(N-1))_+^{N-1}; the general-K form integrates the
/// Laplacian bound. Clamped to zero past the first focal zero.
inline double tube_perimeter_bound(const curvature_dimension& cd, double c, double P0, double t) {
    const double lam = c / (cd.N - 1);
    const double s = s_lambda(cd.k, t >= 0.0 ? -lam : lam, std::abs(t));
    if (s <= 0.0)
        return 0.0;
    return P0 * std::pow(s, cd.N - 1);
}

/// Two-sided envelope for the tube volume: V0 -+ P0 integral of the
/// perimeter-bound integrand over [0, |t|]. Composite Simpson split at the
/// focal zero of the s-function, where the positive-part clamp kinks.
inline std::pair<double, double> tube_volume_bound(const curvature_dimension& cd, double c,
                                                   double P0, double V0, double t) {
    const double lam = c / (cd.N - 1);
    const double sign_lam = t >= 0.0 ? -lam : lam;
    const double cutoff = s_lambda_first_zero(cd.k, sign_lam);
    const double upper_limit = std::min(std::abs(t), cutoff);
    const double gain =
        P0 * composite_simpson(
                 [&](double s) {
                     const double v = s_lambda(cd.k, sign_lam, s);
                     return v <= 0.0 ? 0.0 : std::pow(v, cd.N - 1);
                 },
                 0.0, upper_limit, 1024);
    return {V0 - gain, V0 + gain};
}

/// Maximal inward reach compatible with the K = 0 Laplacian bound:
/// (N-1)/c. Balls saturate it.
inline double inradius_bound(const curvature_dimension& cd, double c) {
    if (cd.K != 0.0)
        throw out_of_range("inradius_bound: stated for K = 0 only");
    if (!(c > 0.0))
        throw nonpositive_barrier("inradius_bound: barrier must be positive");
    return (cd.N - 1) / c;
}

/// One row of the tube-bound sweep emitted by the CLI.
struct tube_row {
    double t;
    double perimeter_bound;
    double volume_lower;
    double volume_upper;
};

inline std::vector<tube_row> tube_sweep(const curvature_dimension& cd, double c, double P0,
                                        double V0, const std::vector<double>& ts) {
    std::vector<tube_row> rows;
    rows.reserve(ts.size());
    for (double t : ts) {
        const auto [lo, hi] = tube_volume_bound(cd, c, P0, V0, t);
        rows.push_back({t, tube_perimeter_bound(cd, c, P0, t), lo, hi});
    }
    return rows;
}

} // namespace isoprofile
