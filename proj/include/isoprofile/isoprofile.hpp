#pragma once

// Umbrella header: exact isoperimetric profiles of constant-curvature model
// spaces, cones and spherical suspensions; certification of the sharp
// second-order differential inequalities of the profile in pointwise,
// viscosity and distributional senses; AVR and Levy-Gromov bounds; and
// Heintze-Karcher tube estimates.

#include "isoprofile/builders.hpp"
#include "isoprofile/comparison.hpp"
#include "isoprofile/errors.hpp"
#include "isoprofile/inequalities.hpp"
#include "isoprofile/interpolation.hpp"
#include "isoprofile/model_geometry.hpp"
#include "isoprofile/numerics.hpp"
#include "isoprofile/profile.hpp"
#include "isoprofile/profile_io.hpp"
#include "isoprofile/tube_bounds.hpp"
#include "isoprofile/warped_products.hpp"
#include "isoprofile/weak_d2.hpp"
