#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>

#include "isoprofile/errors.hpp"

namespace isoprofile {

inline constexpr double pi = 3.14159265358979323846264338327950288;
inline constexpr double infinity = std::numeric_limits<double>::infinity();

namespace detail {

template <typename F>
double adaptive_simpson_rec(const F& f, double a, double b, double fa, double fm, double fb,
                            double whole, double atol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * atol)
        return left + right + delta / 15.0;
    return adaptive_simpson_rec(f, a, m, fa, flm, fm, left, 0.5 * atol, depth - 1) +
           adaptive_simpson_rec(f, m, b, fm, frm, fb, right, 0.5 * atol, depth - 1);
}

} // namespace detail

/// Adaptive Simpson quadrature with absolute tolerance and depth cap.
template <typename F>
double adaptive_simpson(const F& f, double a, double b, double atol = 1e-12, int max_depth = 40) {
    if (a == b)
        return 0.0;
    const double fa = f(a);
    const double m = 0.5 * (a + b);
    const double fm = f(m);
    const double fb = f(b);
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return detail::adaptive_simpson_rec(f, a, b, fa, fm, fb, whole, atol, max_depth);
}

/// Composite Simpson on n uniform panels (n rounded up to even).
template <typename F>
double composite_simpson(const F& f, double a, double b, std::size_t panels) {
    if (a == b)
        return 0.0;
    if (panels % 2 != 0)
        ++panels;
    const double h = (b - a) / static_cast<double>(panels);
    double odd = 0.0, even = 0.0;
    for (std::size_t i = 1; i < panels; i += 2)
        odd += f(a + static_cast<double>(i) * h);
    for (std::size_t i = 2; i < panels; i += 2)
        even += f(a + static_cast<double>(i) * h);
    return h / 3.0 * (f(a) + f(b) + 4.0 * odd + 2.0 * even);
}

/// Solve f(x) = target for increasing continuous f on [lo, hi] by bisection.
/// Stops once |f(mid) - target| <= vtol and the bracket is below xtol_rel
/// relative width (both, so the root stays accurate where f is flat and the
/// value stays accurate where f is steep), capped at max_iter halvings.
template <typename F>
double bisect_increasing(const F& f, double target, double lo, double hi, double vtol,
                         int max_iter = 200, double xtol_rel = 1e-12) {
    const double flo = f(lo) - target;
    const double fhi = f(hi) - target;
    if (flo > 0.0 || fhi < 0.0)
        throw out_of_range("bisect_increasing: target not bracketed");
    double mid = 0.5 * (lo + hi);
    for (int it = 0; it < max_iter; ++it) {
        mid = 0.5 * (lo + hi);
        const double fm = f(mid) - target;
        if (fm < 0.0)
            lo = mid;
        else
            hi = mid;
        const double width = hi - lo;
        if (std::abs(fm) <= vtol && width <= xtol_rel * std::max(1.0, std::abs(mid)))
            return mid;
        if (width <= std::abs(mid) * 1e-17)
            break;
    }
    return mid;
}

} // namespace isoprofile
