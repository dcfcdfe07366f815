#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "isoprofile/errors.hpp"
#include "isoprofile/model_geometry.hpp"
#include "isoprofile/profile.hpp"

namespace isoprofile {

/// Asymptotic volume ratio context for nonnegative-Ricci certifications.
/// theta = AVR lies in (0, 1], with 1 only for Euclidean space.
struct avr_context {
    double theta;
    int N;

    avr_context(double theta_, int dimension) : theta(theta_), N(dimension) {
        if (!(theta_ > 0.0) || theta_ > 1.0)
            throw std::invalid_argument("avr_context: theta must lie in (0, 1]");
        if (dimension < 2)
            throw std::invalid_argument("avr_context: N must be >= 2");
    }
};

/// Sharp isoperimetric lower bound under nonnegative Ricci and Euclidean
/// volume growth: N (theta omega_N)^{1/N} V^{(N-1)/N}.
inline double avr_lower_bound(const avr_context& ctx, double V) {
    if (!(V > 0.0))
        throw out_of_range("avr_lower_bound: volume must be positive");
    return ctx.N * std::pow(ctx.theta * unit_ball_volume(ctx.N), 1.0 / ctx.N) *
           std::pow(V, static_cast<double>(ctx.N - 1) / ctx.N);
}

/// The cone profile coincides with the lower bound: balls centered at tips
/// are the minimizers. Exposed separately so reports can cite equality.
inline double cone_profile(const avr_context& ctx, double V) { return avr_lower_bound(ctx, V); }

/// AVR of a cone from its cross-section measure: area / (N omega_N).
inline double cone_avr_from_cross_section(double area, int N) {
    const double round = N * unit_ball_volume(N);
    if (!(area > 0.0) || area > round * (1.0 + 1e-12))
        throw out_of_range("cone_avr_from_cross_section: area outside (0, N omega_N]");
    return std::min(area / round, 1.0);
}

/// Normalized sphere profile I_{S^N}(t H)/H, the Levy-Gromov bound.
inline double levy_gromov_bound(int N, double t) {
    if (t < 0.0 || t > 1.0)
        throw out_of_range("levy_gromov_bound: t must lie in [0, 1]");
    if (t == 0.0 || t == 1.0)
        return 0.0;
    const curvature_dimension cd(static_cast<double>(N - 1), N);
    const double h = model_total_volume(cd);
    return model_profile(cd, t * h) / h;
}

struct certificate_report {
    bool pass;
    double min_slack;
    double argmin_volume;
    bool rigidity_flag; // informational: near-equality regime
    std::string declared_class;
    double tolerance;
    std::string note;
};

/// Certify the Levy-Gromov inequality on a normalized profile. The ambient
/// class RCD(N-1, N) is a caller declaration echoed in the report; a
/// near-zero minimum flags the suspension rigidity regime.
inline certificate_report certify_levy_gromov(const sampled_profile& p, double tol = 1e-8) {
    if (!p.finite_volume())
        throw infinite_volume("certify_levy_gromov: requires finite total volume");
    const sampled_profile norm = normalize(p);
    certificate_report rep{true, infinity, 0.0, false,
                           "RCD(" + std::to_string(p.dimension() - 1) + "," +
                               std::to_string(p.dimension()) + ")",
                           tol,  {}};
    for (std::size_t i = 0; i < norm.size(); ++i) {
        const double slack =
            norm.values()[i] - levy_gromov_bound(norm.dimension(), norm.volumes()[i]);
        if (slack < rep.min_slack) {
            rep.min_slack = slack;
            rep.argmin_volume = p.volumes()[i];
        }
    }
    rep.pass = rep.min_slack >= -tol;
    rep.rigidity_flag = std::abs(rep.min_slack) <= 1e-6;
    if (rep.rigidity_flag)
        rep.note = "equality regime: ambient expected to be a spherical suspension";
    return rep;
}

/// Certify the sharp AVR inequality. If equality holds at one volume within
/// tol, concavity forces the cone power law everywhere; the certifier checks
/// that propagation and fails a profile violating it.
inline certificate_report certify_avr(const sampled_profile& p, const avr_context& ctx,
                                      double tol = 1e-8) {
    certificate_report rep{true, infinity, 0.0, false,
                           "RCD(0," + std::to_string(ctx.N) + ") with AVR " +
                               std::to_string(ctx.theta),
                           tol,  {}};
    bool equality_somewhere = false;
    double max_abs_residual = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        const double bound = avr_lower_bound(ctx, p.volumes()[i]);
        const double slack = p.values()[i] - bound;
        if (slack < rep.min_slack) {
            rep.min_slack = slack;
            rep.argmin_volume = p.volumes()[i];
        }
        equality_somewhere = equality_somewhere || std::abs(slack) <= tol;
        max_abs_residual = std::max(max_abs_residual, std::abs(slack));
    }
    rep.pass = rep.min_slack >= -tol;
    if (equality_somewhere) {
        rep.rigidity_flag = true;
        const bool everywhere = max_abs_residual <= tol;
        if (everywhere) {
            rep.note = "equality at a point propagated: profile matches the cone power law";
        } else {
            rep.pass = false;
            rep.note = "equality at a point but the cone power law fails elsewhere; "
                       "inconsistent with the declared class";
        }
    }
    return rep;
}

enum class bishop_gromov_mode { volume, perimeter };

struct monotonicity_report {
    bool pass;
    double worst_increase; // max over pairs of ratio(R) - ratio(r), r < R
    std::size_t failing_i;
    std::size_t failing_j;
    std::string note;
};

/// Bishop-Gromov checker: ratios volume(r)/v_{K,N}(r) (or perimeter(r)/
/// sigma_{K,N}(r)) must be nonincreasing. Pairwise r < R comparison, the
/// essential-monotonicity reading; the failing pair is reported so callers
/// can resample noisy data.
inline monotonicity_report bishop_gromov_check(const std::vector<std::pair<double, double>>& samples,
                                               const curvature_dimension& cd,
                                               bishop_gromov_mode mode = bishop_gromov_mode::volume,
                                               double tol = 1e-9) {
    monotonicity_report rep{true, -infinity, 0, 0, {}};
    std::vector<double> ratio(samples.size());
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const auto [r, value] = samples[i];
        if (i > 0 && !(r > samples[i - 1].first))
            throw out_of_range("bishop_gromov_check: radii must strictly increase");
        if (!(r > 0.0) || r > cd.r_max * (1.0 + 1e-12))
            throw out_of_range("bishop_gromov_check: radius outside (0, r_max]");
        const double denom =
            mode == bishop_gromov_mode::volume ? ball_volume(cd, r) : sphere_area(cd, r);
        ratio[i] = value / denom;
    }
    for (std::size_t i = 0; i < ratio.size(); ++i) {
        for (std::size_t j = i + 1; j < ratio.size(); ++j) {
            const double inc = ratio[j] - ratio[i];
            if (inc > rep.worst_increase) {
                rep.worst_increase = inc;
                rep.failing_i = i;
                rep.failing_j = j;
            }
        }
    }
    rep.pass = rep.worst_increase <= tol;
    if (!rep.pass)
        rep.note = "ratio increases between the reported sample pair";
    return rep;
}

struct diameter_report {
    bool pass;
    bool rigidity_flag;
    double diameter;
    double slack; // pi - diameter
};

/// Bonnet-Myers checker for declared RCD(N-1, N) ambients: diam <= pi, with
/// equality flagging the suspension rigidity regime.
inline diameter_report bonnet_myers_check(double diameter, int N, double tol = 1e-9) {
    if (N < 2)
        throw std::invalid_argument("bonnet_myers_check: N must be >= 2");
    diameter_report rep{};
    rep.diameter = diameter;
    rep.slack = pi - diameter;
    rep.pass = diameter <= pi + tol;
    rep.rigidity_flag = std::abs(rep.slack) <= 1e-6;
    return rep;
}

/// Relative gap in the large-volume existence argument: a profile cannot sit
/// between the bounds with theta + eps and theta + eps/2, and the gap
/// ((theta+eps)/(theta+eps/2))^{1/N} - 1 > 0 quantifies the contradiction.
inline double avr_gap_existence_threshold(double theta, double eps, int N) {
    if (!(theta > 0.0) || !(eps > 0.0) || theta + eps > 1.0 + 1e-12)
        throw out_of_range("avr_gap_existence_threshold: need theta > 0, eps > 0, theta+eps <= 1");
    return std::pow((theta + eps) / (theta + 0.5 * eps), 1.0 / N) - 1.0;
}

} // namespace isoprofile
