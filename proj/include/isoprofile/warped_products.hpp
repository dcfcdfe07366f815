#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "isoprofile/errors.hpp"
#include "isoprofile/model_geometry.hpp"
#include "isoprofile/numerics.hpp"
#include "isoprofile/profile.hpp"

namespace isoprofile {

enum class warp_kind { cone, suspension, model, custom };

/// One-dimensional warped product over a round link scaled by a: the
/// brute-force oracle for volumes and perimeters of symmetric regions.
/// cone: f(r) = a r on [0, inf); suspension: f(r) = a sin r on [0, pi];
/// model(k): f = sin_k with unit link.
class warped_product {
public:
    static warped_product cone(double a, int N) {
        check_scale(a);
        warped_product w(warp_kind::cone, N, a, infinity);
        w.unit_warp_ = [](double r) { return r; };
        return w;
    }

    static warped_product suspension(double a, int N) {
        check_scale(a);
        warped_product w(warp_kind::suspension, N, a, pi);
        w.unit_warp_ = [](double r) { return std::sin(r); };
        return w;
    }

    static warped_product model(double k, int N) {
        const double len = k > 0.0 ? pi / std::sqrt(k) : infinity;
        warped_product w(warp_kind::model, N, 1.0, len);
        w.unit_warp_ = [k](double r) { return sin_k(k, r); };
        return w;
    }

    static warped_product custom(std::function<double(double)> unit_warp, double length, int N,
                                 double a = 1.0) {
        check_scale(a);
        warped_product w(warp_kind::custom, N, a, length);
        w.unit_warp_ = std::move(unit_warp);
        return w;
    }

    warp_kind kind() const { return kind_; }
    int dimension() const { return N_; }
    double link_scale() const { return a_; }
    double length() const { return length_; }
    bool two_ended() const { return std::isfinite(length_); }
    double unit_warp(double r) const { return unit_warp_(r); }

    /// Volume of the cap {distance from the left end <= t}:
    /// N omega_N a^{N-1} integral of unit_warp^{N-1} over [0, t].
    double cap_volume(double t) const {
        check_range(t);
        const double scale = N_ * unit_ball_volume(N_) * std::pow(a_, N_ - 1);
        if (kind_ == warp_kind::cone)
            return scale * std::pow(t, N_) / N_;
        return scale * adaptive_simpson(
                           [&](double s) { return std::pow(unit_warp_(s), N_ - 1); }, 0.0, t,
                           1e-12, 40);
    }

    /// Perimeter of the cap at parameter t: N omega_N (a unit_warp(t))^{N-1}.
    double cap_perimeter(double t) const {
        check_range(t);
        return N_ * unit_ball_volume(N_) * std::pow(a_ * unit_warp_(t), N_ - 1);
    }

    double total_volume() const { return two_ended() ? cap_volume(length_) : infinity; }

    /// Cap parameter holding volume V, by bisection at the same tolerance as
    /// the model-space inversion.
    double invert_cap_volume(double V) const {
        const double total = total_volume();
        if (!(V > 0.0) || !(V < total * (1.0 + 1e-12)))
            throw out_of_range("invert_cap_volume: volume outside (0, total)");
        double hi;
        if (two_ended()) {
            hi = length_;
        } else {
            hi = 1.0;
            while (cap_volume(hi) < V) {
                hi *= 2.0;
                if (hi > 1e100)
                    throw no_convergence("invert_cap_volume: bracket expansion failed");
            }
        }
        return bisect_increasing([&](double t) { return cap_volume(t); }, V, 0.0, hi,
                                 1e-12 * std::max(1.0, V), 200);
    }

private:
    warped_product(warp_kind kind, int N, double a, double length)
        : kind_(kind), N_(N), a_(a), length_(length) {
        if (N < 2)
            throw std::invalid_argument("warped_product: N must be >= 2");
    }

    static void check_scale(double a) {
        if (!(a > 0.0) || a > 1.0)
            throw std::invalid_argument("warped_product: link scale must lie in (0, 1]");
    }

    void check_range(double t) const {
        if (t < 0.0 || t > length_)
            throw out_of_range("warped_product: parameter outside [0, length]");
    }

    warp_kind kind_;
    int N_;
    double a_;
    double length_;
    std::function<double(double)> unit_warp_;
};

struct oracle_profile {
    sampled_profile profile;
    bool certified_minimal; // false: candidate upper bound only (custom warps)
};

namespace detail {

inline sampled_profile cap_profile(const warped_product& w, const std::vector<double>& volumes) {
    std::vector<double> values(volumes.size());
    const double total = w.total_volume();
    for (std::size_t i = 0; i < volumes.size(); ++i) {
        const double V = volumes[i];
        double best = w.cap_perimeter(w.invert_cap_volume(V));
        if (w.two_ended()) {
            // caps from the far end are complements of near-end caps
            const double complement = total - V;
            if (complement > 0.0 && complement < total)
                best = std::min(best, w.cap_perimeter(w.invert_cap_volume(complement)));
        }
        values[i] = best;
    }
    return sampled_profile(std::vector<double>(volumes), std::move(values), total,
                           w.dimension());
}

} // namespace detail

/// Candidate profile from symmetric caps and complements, for any warp kind.
/// certified_minimal is true only on the classes where symmetric caps are
/// known minimizers (cones, suspensions, models); custom warps yield upper
/// bounds for the profile, never presented as the profile itself.
inline oracle_profile candidate_profile(const warped_product& w,
                                        const std::vector<double>& volumes) {
    return {detail::cap_profile(w, volumes), w.kind() != warp_kind::custom};
}

/// Exact symmetric-region profile on cones, suspensions and models.
inline sampled_profile symmetric_profile(const warped_product& w,
                                         const std::vector<double>& volumes) {
    if (w.kind() == warp_kind::custom)
        throw unsupported_kind(
            "symmetric_profile: custom warps yield candidate upper bounds only");
    return detail::cap_profile(w, volumes);
}

} // namespace isoprofile
