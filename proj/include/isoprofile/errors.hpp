#pragma once

#include <stdexcept>
#include <string>

namespace isoprofile {

/// Base class for all library errors.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Radius beyond the model-space domain cap (K > 0), or negative.
struct domain_exceeded : error {
    using error::error;
};

/// Argument outside the documented range of an operation.
struct out_of_range : error {
    using error::error;
};

/// Evaluation at a focal point where the s-function vanishes.
struct singular_point : error {
    using error::error;
};

/// One-sided derivatives disagree beyond the differentiability proxy.
struct not_differentiable : error {
    using error::error;
};

/// Operation requires finite total volume.
struct infinite_volume : error {
    using error::error;
};

/// Mollification support does not fit inside the window.
struct window_too_small : error {
    using error::error;
};

/// A required differential-inequality certificate is absent or failed.
struct precondition_unverified : error {
    using error::error;
};

/// Iterative solve missed its matching tolerance.
struct no_convergence : error {
    using error::error;
};

/// Barrier constant must be positive for this bound.
struct nonpositive_barrier : error {
    using error::error;
};

/// Warp kind outside the certified symmetric-minimizer classes.
struct unsupported_kind : error {
    using error::error;
};

} // namespace isoprofile
