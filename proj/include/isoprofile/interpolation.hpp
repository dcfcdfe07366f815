#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "isoprofile/errors.hpp"

namespace isoprofile {

namespace detail {

// Fritsch-Carlson slope limiting. Interior slopes are weighted harmonic means
// of adjacent secants, zero at local extrema; endpoint slopes use the shape-
// preserving three-point rule. Monotone data yields a monotone interpolant.
inline std::vector<double> pchip_slopes(std::span<const double> x, std::span<const double> y) {
    const std::size_t n = x.size();
    std::vector<double> h(n - 1), d(n - 1), m(n);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        h[i] = x[i + 1] - x[i];
        d[i] = (y[i + 1] - y[i]) / h[i];
    }
    if (n == 2) {
        m[0] = m[1] = d[0];
        return m;
    }
    for (std::size_t i = 1; i + 1 < n; ++i) {
        if (d[i - 1] == 0.0 || d[i] == 0.0 || (d[i - 1] > 0.0) != (d[i] > 0.0)) {
            m[i] = 0.0;
        } else {
            const double w1 = 2.0 * h[i] + h[i - 1];
            const double w2 = h[i] + 2.0 * h[i - 1];
            m[i] = (w1 + w2) / (w1 / d[i - 1] + w2 / d[i]);
        }
    }
    auto edge = [](double h0, double h1, double d0, double d1) {
        double s = ((2.0 * h0 + h1) * d0 - h0 * d1) / (h0 + h1);
        if (s * d0 <= 0.0)
            s = 0.0;
        else if (d0 * d1 < 0.0 && std::abs(s) > 3.0 * std::abs(d0))
            s = 3.0 * d0;
        return s;
    };
    m[0] = edge(h[0], h[1], d[0], d[1]);
    m[n - 1] = edge(h[n - 2], h[n - 3], d[n - 2], d[n - 3]);
    return m;
}

} // namespace detail

/// A sampled function on a strictly increasing grid with monotone cubic
/// (PCHIP) evaluation between nodes.
class grid_function {
public:
    grid_function() = default;

    grid_function(std::vector<double> xs, std::vector<double> ys)
        : xs_(std::move(xs)), ys_(std::move(ys)) {
        if (xs_.size() != ys_.size() || xs_.size() < 2)
            throw std::invalid_argument("grid_function: need >= 2 matching samples");
        for (std::size_t i = 0; i + 1 < xs_.size(); ++i)
            if (!(xs_[i] < xs_[i + 1]))
                throw std::invalid_argument("grid_function: grid not strictly increasing");
        slopes_ = detail::pchip_slopes(xs_, ys_);
    }

    const std::vector<double>& xs() const { return xs_; }
    const std::vector<double>& ys() const { return ys_; }
    std::size_t size() const { return xs_.size(); }
    double x_min() const { return xs_.front(); }
    double x_max() const { return xs_.back(); }
    double span() const { return xs_.back() - xs_.front(); }

    /// Index of the last node with xs[i] <= x (0 <= i <= n-2).
    std::size_t cell_index(double x) const {
        auto it = std::upper_bound(xs_.begin(), xs_.end(), x);
        std::size_t i = static_cast<std::size_t>(it - xs_.begin());
        if (i > 0)
            --i;
        return std::min(i, xs_.size() - 2);
    }

    /// Index of a node equal to x within tol, or npos.
    std::size_t node_at(double x, double tol) const {
        const std::size_t i = cell_index(x);
        if (std::abs(xs_[i] - x) <= tol)
            return i;
        if (std::abs(xs_[i + 1] - x) <= tol)
            return i + 1;
        return npos;
    }

    double operator()(double x) const {
        const double slack = 1e-12 * std::max(1.0, std::abs(span()));
        if (x < xs_.front() - slack || x > xs_.back() + slack)
            throw out_of_range("grid_function: evaluation outside grid range");
        x = std::clamp(x, xs_.front(), xs_.back());
        const std::size_t i = cell_index(x);
        const double h = xs_[i + 1] - xs_[i];
        const double t = (x - xs_[i]) / h;
        const double t2 = t * t;
        const double t3 = t2 * t;
        const double h00 = 2.0 * t3 - 3.0 * t2 + 1.0;
        const double h10 = t3 - 2.0 * t2 + t;
        const double h01 = -2.0 * t3 + 3.0 * t2;
        const double h11 = t3 - t2;
        return h00 * ys_[i] + h10 * h * slopes_[i] + h01 * ys_[i + 1] + h11 * h * slopes_[i + 1];
    }

    /// Node value when x coincides with a node, interpolant otherwise.
    double value_preferring_nodes(double x) const {
        const std::size_t i = node_at(x, 1e-9 * std::max(1.0, span()));
        return i == npos ? (*this)(x) : ys_[i];
    }

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

private:
    std::vector<double> xs_, ys_, slopes_;
};

/// Uniform grid of n points on [a, b] inclusive.
inline std::vector<double> uniform_grid(double a, double b, std::size_t n) {
    std::vector<double> g(n);
    for (std::size_t i = 0; i < n; ++i)
        g[i] = a + (b - a) * static_cast<double>(i) / static_cast<double>(n - 1);
    g.back() = b;
    return g;
}

/// Geometric grid of n points on [a, b], a > 0; resolves power-law behavior
/// near zero on infinite-volume domains.
inline std::vector<double> geometric_grid(double a, double b, std::size_t n) {
    if (!(a > 0.0) || !(b > a))
        throw std::invalid_argument("geometric_grid: need 0 < a < b");
    std::vector<double> g(n);
    const double la = std::log(a), lb = std::log(b);
    for (std::size_t i = 0; i < n; ++i)
        g[i] = std::exp(la + (lb - la) * static_cast<double>(i) / static_cast<double>(n - 1));
    g.back() = b;
    return g;
}

/// Sample a callable into a grid_function.
template <typename F>
grid_function sample(const F& f, const std::vector<double>& grid) {
    std::vector<double> ys(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i)
        ys[i] = f(grid[i]);
    return grid_function(std::vector<double>(grid), std::move(ys));
}

} // namespace isoprofile
