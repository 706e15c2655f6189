#pragma once

#include "dirdepth/sphere.hpp"

namespace dirdepth {

// Angular Tukey depth on the circle: minimum, over closed half-circles (arcs
// of length pi) containing theta, of the fraction of sample mass in the
// half-circle. Exact, via the breakpoints of the piecewise-constant mass map.
double atd_circle(const UnitVector& theta, const DirectionalSample& sample);

// Angular simplicial depth on the circle: fraction of data pairs whose closed
// shorter arc contains theta. Antipodal pairs contribute 0.
double asd_circle(const UnitVector& theta, const DirectionalSample& sample);

} // namespace dirdepth
