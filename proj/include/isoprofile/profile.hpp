#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "isoprofile/errors.hpp"
#include "isoprofile/interpolation.hpp"

namespace isoprofile {

/// A sampled isoperimetric profile: strictly increasing volumes inside
/// (0, total_volume) with positive profile values. Immutable after
/// construction.
class sampled_profile {
public:
    sampled_profile(std::vector<double> volumes, std::vector<double> values, double total_volume,
                    int dimension)
        : total_volume_(total_volume), dimension_(dimension) {
        if (dimension < 2)
            throw std::invalid_argument("sampled_profile: dimension must be >= 2");
        if (volumes.size() != values.size() || volumes.size() < 3)
            throw std::invalid_argument("sampled_profile: need >= 3 matching samples");
        if (!(total_volume > 0.0))
            throw std::invalid_argument("sampled_profile: total volume must be positive");
        for (std::size_t i = 0; i < volumes.size(); ++i) {
            if (!(volumes[i] > 0.0) || !(volumes[i] < total_volume))
                throw std::invalid_argument("sampled_profile: volumes must lie in (0, total)");
            if (i + 1 < volumes.size() && !(volumes[i] < volumes[i + 1]))
                throw std::invalid_argument("sampled_profile: volumes must strictly increase");
            if (!(values[i] > 0.0))
                throw std::invalid_argument(
                    "sampled_profile: profile values must be positive on the open range");
        }
        grid_ = grid_function(std::move(volumes), std::move(values));
    }

    const std::vector<double>& volumes() const { return grid_.xs(); }
    const std::vector<double>& values() const { return grid_.ys(); }
    double total_volume() const { return total_volume_; }
    bool finite_volume() const { return std::isfinite(total_volume_); }
    int dimension() const { return dimension_; }
    std::size_t size() const { return grid_.size(); }

    const grid_function& grid() const { return grid_; }
    double operator()(double V) const { return grid_(V); }

private:
    grid_function grid_;
    double total_volume_;
    int dimension_;
};

/// The profile raised to the power N/(N-1): psi = I^{N/(N-1)}.
struct psi_profile {
    std::vector<double> volumes;
    std::vector<double> psi;
    int dimension;

    grid_function grid() const { return grid_function(volumes, psi); }
};

inline psi_profile psi_transform(const sampled_profile& p) {
    const double e = static_cast<double>(p.dimension()) / (p.dimension() - 1);
    psi_profile out{p.volumes(), {}, p.dimension()};
    out.psi.resize(p.size());
    for (std::size_t i = 0; i < p.size(); ++i)
        out.psi[i] = std::pow(p.values()[i], e);
    return out;
}

/// Inverse power map, psi -> profile values.
inline std::vector<double> psi_inverse(const psi_profile& q) {
    const double e = static_cast<double>(q.dimension - 1) / q.dimension;
    std::vector<double> values(q.psi.size());
    for (std::size_t i = 0; i < q.psi.size(); ++i)
        values[i] = std::pow(q.psi[i], e);
    return values;
}

/// Reparametrize to normalized volume t in (0,1) and divide values by the
/// total volume, the Levy-Gromov normalization.
inline sampled_profile normalize(const sampled_profile& p) {
    if (!p.finite_volume())
        throw infinite_volume("normalize: requires finite total volume");
    const double h = p.total_volume();
    std::vector<double> t(p.size()), v(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        t[i] = p.volumes()[i] / h;
        v[i] = p.values()[i] / h;
    }
    return sampled_profile(std::move(t), std::move(v), 1.0, p.dimension());
}

struct symmetry_report {
    double max_residual;
    std::size_t worst_index;
};

/// Max |I(V) - I(V_tot - V)| over grid points whose mirror lies in range.
inline symmetry_report symmetry_check(const sampled_profile& p) {
    if (!p.finite_volume())
        throw infinite_volume("symmetry_check: requires finite total volume");
    symmetry_report rep{0.0, 0};
    const double vt = p.total_volume();
    for (std::size_t i = 0; i < p.size(); ++i) {
        const double mirror = vt - p.volumes()[i];
        if (mirror < p.volumes().front() || mirror > p.volumes().back())
            continue;
        const double r = std::abs(p.values()[i] - p.grid().value_preferring_nodes(mirror));
        if (r > rep.max_residual) {
            rep.max_residual = r;
            rep.worst_index = i;
        }
    }
    return rep;
}

enum class side { left, right };

struct derivative_estimate {
    double value;
    double window; // smallest one-sided window used
};

/// One-sided derivative as the extrapolated limit of secant slopes over
/// shrinking one-sided node windows. Node data is the ground truth: windows
/// shrink down to the grid resolution, never below it, so a kink in the data
/// keeps distinct sides.
inline derivative_estimate one_sided_derivative(const grid_function& f, double x, side s) {
    const double scale = std::max(1.0, f.span());
    if (x <= f.x_min() + 1e-14 * scale || x >= f.x_max() - 1e-14 * scale)
        throw out_of_range("one_sided_derivative: point must be interior");
    const double fx = f.value_preferring_nodes(x);
    const auto& xs = f.xs();
    const auto& ys = f.ys();

    std::vector<double> hs, slopes;
    const double eps = 1e-12 * scale;
    if (s == side::right) {
        for (std::size_t i = f.cell_index(x); i < xs.size() && hs.size() < 4; ++i) {
            const double h = xs[i] - x;
            if (h <= eps)
                continue;
            hs.push_back(h);
            slopes.push_back((ys[i] - fx) / h);
        }
    } else {
        std::size_t i = f.cell_index(x);
        for (std::size_t j = i + 1; j-- > 0 && hs.size() < 4;) {
            const double h = x - xs[j];
            if (h <= eps)
                continue;
            hs.push_back(h);
            slopes.push_back((fx - ys[j]) / h);
        }
    }
    if (hs.empty())
        throw out_of_range("one_sided_derivative: no nodes on the requested side");
    if (hs.size() == 1)
        return {slopes[0], hs[0]};

    // Neville extrapolation of the secant slope to window -> 0.
    std::vector<double> p = slopes;
    const std::size_t m = hs.size();
    for (std::size_t level = 1; level < m; ++level)
        for (std::size_t i = 0; i + level < m; ++i)
            p[i] = (hs[i + level] * p[i] - hs[i] * p[i + 1]) / (hs[i + level] - hs[i]);
    return {p[0], hs[0]};
}

inline derivative_estimate one_sided_derivative(const sampled_profile& p, double V, side s) {
    return one_sided_derivative(p.grid(), V, s);
}

/// Mean curvature barrier read off the profile: c = I'(V) where the two
/// one-sided derivatives agree within the differentiability proxy. For K = 0
/// ambients with superlinear volume growth c > 0 is expected; reported, not
/// enforced.
inline double barrier_from_profile(const sampled_profile& p, double V, double tol = 1e-6) {
    const auto l = one_sided_derivative(p, V, side::left);
    const auto r = one_sided_derivative(p, V, side::right);
    if (std::abs(l.value - r.value) > tol)
        throw not_differentiable("barrier_from_profile: one-sided derivatives disagree");
    return 0.5 * (l.value + r.value);
}

struct subadditivity_report {
    bool holds;
    double min_slack;      // min over pairs of I(V1)+I(V2)-I(V1+V2)
    std::size_t argmin_i;
    std::size_t argmin_j;
};

/// Checks strict subadditivity I(V1+V2) < I(V1)+I(V2) over all grid pairs
/// with V1+V2 inside the sampled range (nonnegative-curvature context).
inline subadditivity_report strict_subadditivity_check(const sampled_profile& p) {
    subadditivity_report rep{true, infinity, 0, 0};
    const auto& v = p.volumes();
    const auto& y = p.values();
    for (std::size_t i = 0; i < v.size(); ++i) {
        for (std::size_t j = i; j < v.size(); ++j) {
            const double sum = v[i] + v[j];
            if (sum > v.back())
                break;
            const double slack = y[i] + y[j] - p.grid().value_preferring_nodes(sum);
            if (slack < rep.min_slack) {
                rep.min_slack = slack;
                rep.argmin_i = i;
                rep.argmin_j = j;
            }
            if (slack <= 0.0)
                rep.holds = false;
        }
    }
    return rep;
}

} // namespace isoprofile
