#pragma once

// Deterministic 50-function suite for the three-sense equivalence checks:
// concave piecewise-linear ramps, smooth concave bumps, model psi curves and
// concave perturbations (all expected to pass their matched inequality), plus
// planted violators with convex kinks (expected to fail in every sense).

#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "isoprofile/interpolation.hpp"
#include "isoprofile/model_geometry.hpp"
#include "isoprofile/numerics.hpp"
#include "isoprofile/weak_d2.hpp"

namespace suite {

struct member {
    std::string name;
    isoprofile::grid_function f;
    isoprofile::value_map g;
    bool expected_pass;
};

inline isoprofile::grid_function sphere_psi(std::size_t n = 257) {
    const auto xs = isoprofile::uniform_grid(0.0, 4.0 * isoprofile::pi, n);
    std::vector<double> ys(n);
    for (std::size_t i = 0; i < n; ++i)
        ys[i] = xs[i] * (4.0 * isoprofile::pi - xs[i]);
    return isoprofile::grid_function(xs, ys);
}

inline isoprofile::grid_function hyperbolic_psi(std::size_t n = 257) {
    const auto xs = isoprofile::uniform_grid(0.0, 4.0 * isoprofile::pi, n);
    std::vector<double> ys(n);
    for (std::size_t i = 0; i < n; ++i)
        ys[i] = xs[i] * xs[i] + 4.0 * isoprofile::pi * xs[i];
    return isoprofile::grid_function(xs, ys);
}

inline isoprofile::grid_function s3_psi(std::size_t n = 257) {
    const isoprofile::curvature_dimension cd(2.0, 3);
    const double total = isoprofile::model_total_volume(cd);
    const auto xs = isoprofile::uniform_grid(total / 64.0, total * 63.0 / 64.0, n);
    std::vector<double> ys(n);
    for (std::size_t i = 0; i < n; ++i)
        ys[i] = std::pow(isoprofile::model_profile(cd, xs[i]), 1.5);
    return isoprofile::grid_function(xs, ys);
}

// Concave piecewise-linear ramp from strictly decreasing random slopes,
// optionally with one planted convex kink (slope jump +jump at node kink_at).
inline isoprofile::grid_function random_ramp(std::mt19937& rng, std::size_t n, double jump = 0.0,
                                             std::size_t kink_at = 0) {
    std::uniform_real_distribution<double> u(0.05, 0.4);
    const auto xs = isoprofile::uniform_grid(0.0, 1.0, n);
    std::vector<double> ys(n);
    ys[0] = 1.0;
    double slope = 2.0;
    for (std::size_t i = 1; i < n; ++i) {
        slope -= u(rng) * 8.0 / static_cast<double>(n);
        if (jump != 0.0 && i == kink_at)
            slope += jump;
        ys[i] = ys[i - 1] + slope * (xs[i] - xs[i - 1]);
    }
    return isoprofile::grid_function(xs, ys);
}

// Smooth strictly concave sample: -a (x-c)^2 - d (x-e)^4 + offset.
inline isoprofile::grid_function random_smooth_concave(std::mt19937& rng, std::size_t n) {
    std::uniform_real_distribution<double> u(0.2, 1.0);
    const double a = u(rng), c = u(rng), d = 0.5 * u(rng), e = u(rng);
    const auto xs = isoprofile::uniform_grid(0.0, 1.0, n);
    std::vector<double> ys(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double p = xs[i] - c, q = xs[i] - e;
        ys[i] = 5.0 - a * p * p - d * q * q * q * q;
    }
    return isoprofile::grid_function(xs, ys);
}

inline std::vector<member> build(std::size_t count = 50, std::uint32_t seed = 4242,
                                 std::size_t n = 257) {
    using isoprofile::pi;
    std::mt19937 rng(seed);
    std::vector<member> out;
    const isoprofile::value_map zero = [](double) { return 0.0; };
    const isoprofile::value_map minus2 = [](double) { return -2.0; };

    out.push_back({"sphere_psi", sphere_psi(n), minus2, true});
    out.push_back({"hyperbolic_psi", hyperbolic_psi(n), [](double) { return 2.0; }, true});
    {
        const auto xs = isoprofile::uniform_grid(0.0, 4.0 * pi, n);
        std::vector<double> ys(n);
        for (std::size_t i = 0; i < n; ++i)
            ys[i] = 4.0 * pi * xs[i];
        out.push_back({"euclidean_psi", isoprofile::grid_function(xs, ys), zero, true});
    }
    out.push_back(
        {"s3_psi", s3_psi(n), [](double y) { return -3.0 * std::pow(y, -1.0 / 3.0); }, true});
    {
        // concave perturbation of the sphere psi keeps the inequality
        const auto base = sphere_psi(n);
        std::vector<double> ys = base.ys();
        for (std::size_t i = 0; i < n; ++i)
            ys[i] += 0.1 * std::sin(base.xs()[i] / 4.0);
        out.push_back({"sphere_psi_perturbed", isoprofile::grid_function(base.xs(), ys), minus2,
                       true});
    }
    {
        // planted violator: x^2 on (-1, 1)
        const auto xs = isoprofile::uniform_grid(-1.0, 1.0, n);
        std::vector<double> ys(n);
        for (std::size_t i = 0; i < n; ++i)
            ys[i] = xs[i] * xs[i];
        out.push_back({"parabola_violator", isoprofile::grid_function(xs, ys), zero, false});
    }
    {
        // planted violator: sphere psi with a convex kink in the middle
        const auto base = sphere_psi(n);
        std::vector<double> ys = base.ys();
        const double x0 = base.xs()[n / 2];
        for (std::size_t i = 0; i < n; ++i)
            ys[i] += 2.0 * std::max(0.0, base.xs()[i] - x0);
        out.push_back(
            {"sphere_psi_kinked", isoprofile::grid_function(base.xs(), ys), minus2, false});
    }

    std::uniform_int_distribution<std::size_t> kink_pos(n / 4, 3 * n / 4);
    while (out.size() < count) {
        const std::size_t idx = out.size();
        switch (idx % 4) {
        case 0:
            out.push_back({"ramp_" + std::to_string(idx), random_ramp(rng, n), zero, true});
            break;
        case 1:
            out.push_back({"smooth_" + std::to_string(idx), random_smooth_concave(rng, n), zero,
                           true});
            break;
        case 2:
            out.push_back({"ramp_kinked_" + std::to_string(idx),
                           random_ramp(rng, n, 1.0, kink_pos(rng)), zero, false});
            break;
        default: {
            // concave ramp plus a concave quadratic stays concave
            auto ramp = random_ramp(rng, n);
            std::vector<double> ys = ramp.ys();
            for (std::size_t i = 0; i < n; ++i) {
                const double x = ramp.xs()[i];
                ys[i] += -0.5 * (x - 0.3) * (x - 0.3);
            }
            out.push_back({"ramp_plus_quadratic_" + std::to_string(idx),
                           isoprofile::grid_function(ramp.xs(), ys), zero, true});
            break;
        }
        }
    }
    return out;
}

} // namespace suite
