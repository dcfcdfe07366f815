#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "isoprofile/interpolation.hpp"
#include "isoprofile/model_geometry.hpp"
#include "isoprofile/profile.hpp"
#include "isoprofile/warped_products.hpp"

namespace isoprofile {

enum class grid_spacing { uniform, geometric };

/// Volume grid with n interior points. Finite-volume spaces use a uniform
/// grid strictly inside (0, v_total); infinite-volume spaces sample (0,
/// v_max] uniformly or geometrically (the geometric option resolves the
/// power-law regime near zero volume).
inline std::vector<double> volume_grid(double v_total, double v_max, std::size_t n,
                                       grid_spacing spacing = grid_spacing::uniform) {
    std::vector<double> g;
    g.reserve(n);
    if (std::isfinite(v_total)) {
        for (std::size_t i = 1; i <= n; ++i)
            g.push_back(v_total * static_cast<double>(i) / static_cast<double>(n + 1));
        return g;
    }
    if (spacing == grid_spacing::geometric)
        return geometric_grid(v_max * 1e-4, v_max, n);
    for (std::size_t i = 1; i <= n; ++i)
        g.push_back(v_max * static_cast<double>(i) / static_cast<double>(n));
    return g;
}

/// Sampled profile of the constant-curvature model space.
inline sampled_profile model_profile_grid(const curvature_dimension& cd, std::size_t n,
                                          double v_max = 0.0,
                                          grid_spacing spacing = grid_spacing::uniform) {
    const double total = model_total_volume(cd);
    const auto grid = volume_grid(total, v_max, n, spacing);
    std::vector<double> values(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i)
        values[i] = model_profile(cd, grid[i]);
    return sampled_profile(std::vector<double>(grid), std::move(values), total, cd.N);
}

/// Sampled oracle profile of a cone/suspension/model warped product.
inline sampled_profile warped_profile_grid(const warped_product& w, std::size_t n,
                                           double v_max = 0.0,
                                           grid_spacing spacing = grid_spacing::uniform) {
    const auto grid = volume_grid(w.total_volume(), v_max, n, spacing);
    return symmetric_profile(w, grid);
}

} // namespace isoprofile
