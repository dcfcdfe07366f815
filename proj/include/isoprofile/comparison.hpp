#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "isoprofile/errors.hpp"
#include "isoprofile/interpolation.hpp"
#include "isoprofile/model_geometry.hpp"
#include "isoprofile/profile.hpp"
#include "isoprofile/weak_d2.hpp"

namespace isoprofile {

enum class ordering_kind { f2_ge_f1, f1_gt_f2_after, inconclusive };

inline const char* to_string(ordering_kind o) {
    switch (o) {
    case ordering_kind::f2_ge_f1: return "f2_ge_f1";
    case ordering_kind::f1_gt_f2_after: return "f1_gt_f2_after";
    default: return "inconclusive";
    }
}

struct derivative_match {
    double point;
    double f1_left, f1_right;
    double f2_left, f2_right;

    bool matched(double tol) const {
        return std::abs(f1_left - f2_left) <= tol && std::abs(f1_right - f2_right) <= tol;
    }
};

struct comparison_verdict {
    ordering_kind ordering;
    std::vector<double> touch_points; // representatives of touching clusters
    std::size_t touch_count;          // probes within touch tolerance
    std::vector<derivative_match> derivative_matches;
    bool derivatives_matched;
    bool certificates_ok;
    double max_f1_minus_f2; // over the probe grid
    double propagation_from;
    int direction; // +1: ordering holds to the right, -1: to the left
};

struct comparison_options {
    double touch_tol = 1e-8;
    double derivative_tol = 1e-5;
    std::size_t probes = 1025;
    // The lemma's hypotheses are semantic; certificates come from weak_d2.
    // Disabling enforcement records their status instead of throwing, for
    // violator-detection workflows.
    bool enforce_certificates = true;
};

/// Checks the conclusions of the ODE comparison lemma on a window [a, b]:
/// one-endpoint equality propagates strict ordering, both-endpoint equality
/// forces f2 >= f1 with matching one-sided derivatives at interior touch
/// points. The differential hypotheses (upper D2 f1 >= g(f1), lower D2 f2 <=
/// g(f2)) must be certified by the caller through weak_d2.
inline comparison_verdict compare(const grid_function& f1, const grid_function& f2,
                                  const value_map& g, double a, double b,
                                  const weak_ineq_report* cert_f1_lower,
                                  const weak_ineq_report* cert_f2_upper,
                                  comparison_options opt = {}) {
    (void)g; // hypotheses involving g live in the certificates
    const bool certs_ok = cert_f1_lower && cert_f2_upper && cert_f1_lower->passed() &&
                          cert_f2_upper->passed();
    if (opt.enforce_certificates && !certs_ok)
        throw precondition_unverified("compare: weak_d2 certificates absent or failed");

    comparison_verdict out{};
    out.certificates_ok = certs_ok;
    out.direction = 0;
    out.propagation_from = a;
    out.derivatives_matched = true;

    const auto probes = uniform_grid(a, b, opt.probes);
    std::vector<double> diff(probes.size());
    out.max_f1_minus_f2 = -infinity;
    for (std::size_t i = 0; i < probes.size(); ++i) {
        diff[i] = f2.value_preferring_nodes(probes[i]) - f1.value_preferring_nodes(probes[i]);
        out.max_f1_minus_f2 = std::max(out.max_f1_minus_f2, -diff[i]);
    }
    const bool eq_a = std::abs(diff.front()) <= opt.touch_tol;
    const bool eq_b = std::abs(diff.back()) <= opt.touch_tol;

    if (eq_a && eq_b) {
        double min_diff = infinity;
        for (double d : diff)
            min_diff = std::min(min_diff, d);
        out.ordering =
            min_diff >= -opt.touch_tol ? ordering_kind::f2_ge_f1 : ordering_kind::inconclusive;

        // Touching probes form clusters; record one-sided slopes at each
        // cluster representative interior to the window.
        std::size_t i = 0;
        while (i < probes.size()) {
            if (std::abs(diff[i]) > opt.touch_tol) {
                ++i;
                continue;
            }
            std::size_t j = i;
            while (j + 1 < probes.size() && std::abs(diff[j + 1]) <= opt.touch_tol)
                ++j;
            out.touch_count += j - i + 1;
            const double rep = probes[(i + j) / 2];
            out.touch_points.push_back(rep);
            if (rep > a + 1e-12 * (b - a) && rep < b - 1e-12 * (b - a)) {
                derivative_match m{};
                m.point = rep;
                m.f1_left = one_sided_derivative(f1, rep, side::left).value;
                m.f1_right = one_sided_derivative(f1, rep, side::right).value;
                m.f2_left = one_sided_derivative(f2, rep, side::left).value;
                m.f2_right = one_sided_derivative(f2, rep, side::right).value;
                out.derivative_matches.push_back(m);
                if (!m.matched(opt.derivative_tol))
                    out.derivatives_matched = false;
            }
            i = j + 1;
        }
        return out;
    }

    if (eq_a != eq_b) {
        // One-endpoint equality: strict ordering must propagate away from it.
        const int dir = eq_a ? +1 : -1;
        std::size_t first = probes.size();
        if (dir > 0) {
            for (std::size_t i = 0; i < probes.size(); ++i)
                if (-diff[i] > opt.touch_tol) {
                    first = i;
                    break;
                }
        } else {
            for (std::size_t i = probes.size(); i-- > 0;)
                if (-diff[i] > opt.touch_tol) {
                    first = i;
                    break;
                }
        }
        if (first == probes.size()) {
            double min_diff = infinity;
            for (double d : diff)
                min_diff = std::min(min_diff, d);
            out.ordering = min_diff >= -opt.touch_tol ? ordering_kind::f2_ge_f1
                                                      : ordering_kind::inconclusive;
            return out;
        }
        bool strict = true;
        if (dir > 0) {
            for (std::size_t i = first; i < probes.size(); ++i)
                strict = strict && diff[i] < 0.0;
        } else {
            for (std::size_t i = 0; i <= first; ++i)
                strict = strict && diff[i] < 0.0;
        }
        out.ordering = strict ? ordering_kind::f1_gt_f2_after : ordering_kind::inconclusive;
        out.propagation_from = probes[first];
        out.direction = dir;
        return out;
    }

    out.ordering = ordering_kind::inconclusive;
    return out;
}

/// Equality-case model ODE for the psi-transform on [0, L]:
/// psi'' = -K N/(N-1) psi^{(2-N)/N}, psi(0) = psi(L) = 0, solved by shooting
/// from the midpoint (symmetry forces psi'(L/2) = 0) with RK4 step L/4096.
/// For N >= 3 the right side is singular as psi -> 0; inside a boundary layer
/// of width L/256 the analytic model profile takes over. K = 0 degenerates to
/// the linear solution psi = slope V.
inline grid_function solve_model_psi(const curvature_dimension& cd, double L,
                                     std::optional<double> flat_slope = std::nullopt) {
    constexpr std::size_t steps = 4096;
    if (cd.K == 0.0) {
        if (!flat_slope)
            throw std::invalid_argument("solve_model_psi: K = 0 needs a boundary slope");
        std::vector<double> xs = uniform_grid(0.0, L, steps + 1), ys(steps + 1);
        for (std::size_t i = 0; i <= steps; ++i)
            ys[i] = *flat_slope * xs[i];
        return grid_function(std::move(xs), std::move(ys));
    }
    if (cd.K < 0.0)
        throw out_of_range("solve_model_psi: compact equality case needs K >= 0");

    const double exponent = static_cast<double>(2 - cd.N) / cd.N;
    const double coeff = -cd.K * cd.N / (cd.N - 1);
    auto rhs = [&](double psi) { return coeff * std::pow(std::max(psi, 1e-300), exponent); };

    const double h = L / static_cast<double>(steps);
    const std::size_t layer_steps = cd.N >= 3 ? steps / 256 : 0;
    const std::size_t mid = steps / 2;

    const double psi_exp = static_cast<double>(cd.N) / (cd.N - 1);
    auto model_psi = [&](double v) {
        return v <= 0.0 || v >= L ? 0.0 : std::pow(model_profile(cd, v), psi_exp);
    };
    const double target_x = static_cast<double>(layer_steps) * h;
    const double target_value = model_psi(target_x);

    // Integrate from the midpoint down to the layer edge for a given peak.
    std::vector<double> half(mid - layer_steps + 1);
    auto shoot = [&](double peak) {
        double psi = peak, dpsi = 0.0;
        half[0] = psi;
        for (std::size_t s = 0; s < mid - layer_steps; ++s) {
            auto f = [&](double y, double dy) { return std::make_pair(dy, rhs(y)); };
            const double step = -h;
            auto [k1y, k1d] = f(psi, dpsi);
            auto [k2y, k2d] = f(psi + 0.5 * step * k1y, dpsi + 0.5 * step * k1d);
            auto [k3y, k3d] = f(psi + 0.5 * step * k2y, dpsi + 0.5 * step * k2d);
            auto [k4y, k4d] = f(psi + step * k3y, dpsi + step * k3d);
            psi += step / 6.0 * (k1y + 2.0 * k2y + 2.0 * k3y + k4y);
            dpsi += step / 6.0 * (k1d + 2.0 * k2d + 2.0 * k3d + k4d);
            half[s + 1] = psi;
            if (psi <= 0.0)
                return psi - target_value; // fell through zero early
        }
        return psi - target_value;
    };

    const double peak_guess = model_psi(0.5 * L);
    double lo = 0.5 * peak_guess, hi = 1.5 * peak_guess;
    double flo = shoot(lo), fhi = shoot(hi);
    for (int widen = 0; widen < 8 && flo * fhi > 0.0; ++widen) {
        lo *= 0.7;
        hi *= 1.3;
        flo = shoot(lo);
        fhi = shoot(hi);
    }
    if (flo * fhi > 0.0)
        throw no_convergence("solve_model_psi: shooting bracket failed");
    double best = lo, fbest = flo;
    for (int it = 0; it < 200; ++it) {
        const double mid_p = 0.5 * (lo + hi);
        const double fm = shoot(mid_p);
        if (std::abs(fm) < std::abs(fbest)) {
            best = mid_p;
            fbest = fm;
        }
        if (std::abs(fm) <= 1e-9 || hi - lo <= 1e-15 * peak_guess)
            break;
        (fm < 0.0 ? lo : hi) = mid_p;
    }
    if (std::abs(fbest) > 1e-6)
        throw no_convergence("solve_model_psi: shooting missed the boundary match");
    shoot(best); // refresh the stored half-profile at the accepted peak

    std::vector<double> xs = uniform_grid(0.0, L, steps + 1), ys(steps + 1);
    for (std::size_t i = 0; i <= steps; ++i) {
        const std::size_t mirrored = i <= mid ? i : steps - i;
        if (mirrored <= layer_steps)
            ys[i] = model_psi(xs[mirrored]);
        else
            ys[i] = half[mid - mirrored];
    }
    ys.front() = 0.0;
    ys.back() = 0.0;
    return grid_function(std::move(xs), std::move(ys));
}

/// Model family from the Levy-Gromov rigidity argument:
/// phi_v(t) = I_{S^N}(2 v t) / (2 v) on [0, 1/2], 0 < v <= H^N(S^N)/2.
/// The boundary member v = H^N(S^N)/2 is the normalized sphere profile.
inline double sphere_total_volume(int N) {
    return model_total_volume(curvature_dimension(static_cast<double>(N - 1), N));
}

inline double bayle_phi(int N, double v, double t) {
    const double half = 0.5 * sphere_total_volume(N);
    if (!(v > 0.0) || v > half * (1.0 + 1e-12))
        throw out_of_range("bayle_phi: v outside (0, H^N(S^N)/2]");
    if (t <= 0.0)
        return 0.0;
    const curvature_dimension cd(static_cast<double>(N - 1), N);
    return model_profile(cd, std::min(2.0 * v * t, 2.0 * half)) / (2.0 * v);
}

inline double bayle_f(int N, double v, double t) {
    return std::pow(bayle_phi(N, v, t), static_cast<double>(N) / (N - 1));
}

/// d/dt of the sphere profile at volume V: (N-1) cot of the ball radius.
inline double sphere_profile_slope(int N, double V) {
    const curvature_dimension cd(static_cast<double>(N - 1), N);
    const double r = invert_ball_volume(cd, V);
    const double s = sin_k(cd.k, r);
    if (std::abs(s) < 1e-12)
        throw singular_point("sphere_profile_slope: pole");
    return (N - 1) * cos_k(cd.k, r) / s;
}

inline double bayle_f_prime(int N, double v, double t) {
    const double phi = bayle_phi(N, v, t);
    const double dphi = sphere_profile_slope(N, 2.0 * v * t); // = phi'(t)
    const double e = static_cast<double>(N) / (N - 1);
    return e * std::pow(phi, e - 1.0) * dphi;
}

struct bayle_report {
    bool dominates;       // f_v > f_1 and f_v' > f_1' on the grid
    double min_value_gap; // min of f_v - f_1
    double min_slope_gap; // min of f_v' - f_1'
    double sup_value_gap; // sup |f_v - f_1|, tracks the v -> H/2 limit
};

/// Verifies the strict domination f_v > f_1, f_v' > f_1' on (0, 1/2] used to
/// propagate equality in the Levy-Gromov rigidity step.
inline bayle_report bayle_domination_check(int N, double v, const std::vector<double>& t_grid) {
    const double half = 0.5 * sphere_total_volume(N);
    if (!(v > 0.0) || !(v < half))
        throw out_of_range("bayle_domination_check: v outside (0, H^N(S^N)/2)");
    bayle_report rep{true, infinity, infinity, 0.0};
    for (double t : t_grid) {
        if (!(t > 0.0) || t > 0.5)
            throw out_of_range("bayle_domination_check: t grid must lie in (0, 1/2]");
        const double dv = bayle_f(N, v, t) - bayle_f(N, half, t);
        const double ds = bayle_f_prime(N, v, t) - bayle_f_prime(N, half, t);
        rep.min_value_gap = std::min(rep.min_value_gap, dv);
        rep.min_slope_gap = std::min(rep.min_slope_gap, ds);
        rep.sup_value_gap = std::max(rep.sup_value_gap, std::abs(dv));
    }
    rep.dominates = rep.min_value_gap > 0.0 && rep.min_slope_gap > 0.0;
    return rep;
}

} // namespace isoprofile
