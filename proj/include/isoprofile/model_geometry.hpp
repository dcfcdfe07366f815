#pragma once

#include <array>
#include <cmath>
#include <stdexcept>

#include "isoprofile/errors.hpp"
#include "isoprofile/numerics.hpp"

namespace isoprofile {

// Below this threshold the curvature parameter collapses to the flat branch;
// avoids cancellation in sin(sqrt(k) r)/sqrt(k) as k -> 0.
inline constexpr double flat_branch_threshold = 1e-12;

/// Solution of u'' + k u = 0 with u(0)=1, u'(0)=0.
inline double cos_k(double k, double r) {
    if (std::abs(k) < flat_branch_threshold)
        return 1.0;
    if (k > 0.0)
        return std::cos(std::sqrt(k) * r);
    return std::cosh(std::sqrt(-k) * r);
}

/// Solution of u'' + k u = 0 with u(0)=0, u'(0)=1.
inline double sin_k(double k, double r) {
    if (std::abs(k) < flat_branch_threshold)
        return r;
    if (k > 0.0) {
        const double s = std::sqrt(k);
        return std::sin(s * r) / s;
    }
    const double s = std::sqrt(-k);
    return std::sinh(s * r) / s;
}

inline double sin_k_prime(double k, double r) { return cos_k(k, r); }
inline double cos_k_prime(double k, double r) { return -k * sin_k(k, r); }

/// s_{k,lambda}(r) = cos_k(r) - lambda sin_k(r); governs the evolution of
/// distance spheres from a hypersurface of normalized mean curvature lambda.
inline double s_lambda(double k, double lambda, double r) {
    return cos_k(k, r) - lambda * sin_k(k, r);
}

inline double s_lambda_prime(double k, double lambda, double r) {
    return -k * sin_k(k, r) - lambda * cos_k(k, r);
}

/// First positive zero of s_{k,lambda}, +inf if none.
inline double s_lambda_first_zero(double k, double lambda) {
    if (std::abs(k) < flat_branch_threshold)
        return lambda > 0.0 ? 1.0 / lambda : infinity;
    if (k > 0.0) {
        const double a = std::sqrt(k);
        // tan(a r) = a / lambda
        double r = std::atan2(a, lambda) / a;
        if (r <= 0.0)
            r += pi / a;
        return r;
    }
    const double a = std::sqrt(-k);
    // tanh(a r) = a / lambda; solvable only for lambda > a
    if (lambda <= a)
        return infinity;
    return std::atanh(a / lambda) / a;
}

/// Ricci lower bound K with dimension N; k = K/(N-1) is the sectional
/// parameter of the comparison model, r_max its diameter cap when K > 0.
struct curvature_dimension {
    double K;
    int N;
    double k;
    double r_max;

    curvature_dimension(double ricci_bound, int dimension)
        : K(ricci_bound), N(dimension), k(ricci_bound / (dimension - 1)),
          r_max(ricci_bound > 0.0
                    ? pi * std::sqrt(static_cast<double>(dimension - 1)) / std::sqrt(ricci_bound)
                    : infinity) {
        if (dimension < 2)
            throw std::invalid_argument("curvature_dimension: N must be >= 2");
    }
};

/// Volume of the Euclidean unit ball, omega_N = pi^{N/2} / Gamma(N/2 + 1).
/// Computed through log-Gamma and cached.
inline double unit_ball_volume(int N) {
    if (N < 1)
        throw std::invalid_argument("unit_ball_volume: N must be >= 1");
    constexpr int cache_size = 64;
    static const std::array<double, cache_size> cache = [] {
        std::array<double, cache_size> c{};
        for (int n = 1; n < cache_size; ++n)
            c[static_cast<std::size_t>(n)] =
                std::exp(0.5 * n * std::log(pi) - std::lgamma(0.5 * n + 1.0));
        return c;
    }();
    if (N < cache_size)
        return cache[static_cast<std::size_t>(N)];
    return std::exp(0.5 * N * std::log(pi) - std::lgamma(0.5 * N + 1.0));
}

namespace detail {

// Float noise just past r_max is clamped instead of rejected.
inline double clamp_model_radius(const curvature_dimension& cd, double r) {
    if (r < 0.0)
        throw domain_exceeded("model radius must be nonnegative");
    if (r > cd.r_max) {
        if (r <= cd.r_max + 1e-9)
            return cd.r_max;
        throw domain_exceeded("model radius exceeds the domain cap r_max");
    }
    return r;
}

} // namespace detail

/// Perimeter of the r-ball in the model space: N omega_N sin_k^{N-1}(r).
inline double sphere_area(const curvature_dimension& cd, double r) {
    r = detail::clamp_model_radius(cd, r);
    return cd.N * unit_ball_volume(cd.N) * std::pow(sin_k(cd.k, r), cd.N - 1);
}

/// Volume of the r-ball in the model space. Closed forms for K = 0 and
/// N = 2; adaptive quadrature of sphere_area otherwise.
inline double ball_volume(const curvature_dimension& cd, double r) {
    r = detail::clamp_model_radius(cd, r);
    const double k = cd.k;
    if (std::abs(k) < flat_branch_threshold)
        return unit_ball_volume(cd.N) * std::pow(r, cd.N);
    if (cd.N == 2) {
        if (k > 0.0)
            return 2.0 * pi * (1.0 - std::cos(std::sqrt(k) * r)) / k;
        return 2.0 * pi * (std::cosh(std::sqrt(-k) * r) - 1.0) / (-k);
    }
    return adaptive_simpson([&](double t) { return sphere_area(cd, t); }, 0.0, r, 1e-12, 40);
}

/// Total model volume: finite only for K > 0.
inline double model_total_volume(const curvature_dimension& cd) {
    return cd.K > 0.0 ? ball_volume(cd, cd.r_max) : infinity;
}

/// Radius of the model ball of volume V, by bisection to
/// |ball_volume(r) - V| <= 1e-12 max(1, V).
inline double invert_ball_volume(const curvature_dimension& cd, double V) {
    const double total = model_total_volume(cd);
    if (!(V > 0.0) || !(V < total * (1.0 + 1e-12)))
        throw out_of_range("invert_ball_volume: volume outside (0, total model volume)");
    const double vtol = 1e-12 * std::max(1.0, V);
    double hi;
    if (cd.K > 0.0) {
        if (V >= total)
            return cd.r_max;
        hi = cd.r_max;
    } else {
        hi = 1.0;
        while (ball_volume(cd, hi) < V) {
            hi *= 2.0;
            if (hi > 1e100)
                throw no_convergence("invert_ball_volume: bracket expansion failed");
        }
    }
    return bisect_increasing([&](double r) { return ball_volume(cd, r); }, V, 0.0, hi, vtol, 200);
}

/// Isoperimetric profile of the model space as a function of volume:
/// the perimeter of the ball holding volume V.
inline double model_profile(const curvature_dimension& cd, double V) {
    return sphere_area(cd, invert_ball_volume(cd, V));
}

/// Mean curvature (inner-normal convention) of the sphere at signed
/// distance r from a ball whose boundary has mean curvature (N-1) lambda:
/// (N-1) s'_{k,-lambda}(r) / s_{k,-lambda}(r).
inline double distance_sphere_mean_curvature(const curvature_dimension& cd, double lambda,
                                             double r) {
    const double s = s_lambda(cd.k, -lambda, r);
    if (std::abs(s) < 1e-12)
        throw singular_point("distance_sphere_mean_curvature: focal point");
    return (cd.N - 1) * s_lambda_prime(cd.k, -lambda, r) / s;
}

} // namespace isoprofile
