#pragma once

#include "dirdepth/sphere.hpp"

namespace dirdepth {

struct DeepestOptions {
    int max_iter = 200;           // per start
    double grad_tol = 1e-8;       // tangent-gradient norm stopping threshold
    int polish_starts = 50;       // descents run from the best-ranked candidates; 0 = all
    int circle_grid_starts = 360; // extra angular-grid candidates when q = 2
};

struct DeepestResult {
    UnitVector point;
    double depth;
    int iterations;
    long candidates_evaluated;
};

// arg max of the depth over the sphere. The cosine kernel returns the
// spherical mean directly (throws ConstantDepth on zero resultant). Other
// kernels run multistart projected-gradient descent: every sample point is a
// candidate (plus the spherical mean and, on the circle, an angular grid),
// descent polishes the highest-depth candidates, ties break toward the
// lexicographically smallest coordinate tuple.
DeepestResult deepest(const DeltaSpec& spec, const DirectionalSample& sample,
                      const DeepestOptions& opts = {});

// Exhaustive argmax over the angles 2*pi*k/resolution (circle only); first
// index wins ties. Serves as the q=2 oracle for deepest().
DeepestResult deepest_circle_grid(const DeltaSpec& spec, const DirectionalSample& sample,
                                  long resolution);

} // namespace dirdepth
