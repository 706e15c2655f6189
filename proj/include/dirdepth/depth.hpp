#pragma once

#include <utility>
#include <vector>

#include "dirdepth/quadrature.hpp"
#include "dirdepth/sphere.hpp"

namespace dirdepth {

struct DepthValue {
    double value;
    UnitVector theta;
    DeltaKind spec_kind;
};

// Directional d-depth of theta w.r.t. the empirical distribution:
// d_sup - (1/n) sum_i delta(theta . W_i). Always in [0, d_sup].
DepthValue depth(const DeltaSpec& spec, const UnitVector& theta, const DirectionalSample& sample);

// Cosine-kernel closed form 1 + theta . Wbar; agrees with depth(cos, ...) to 1e-12.
DepthValue depth_cos_closed(const UnitVector& theta, const DirectionalSample& sample);

// Wbar / ||Wbar||. Throws NullResultant when ||Wbar|| < 1e-12, in which case
// the cosine-kernel deepest set is the whole sphere.
UnitVector spherical_mean(const DirectionalSample& sample);

// Resultant length ||Wbar|| of the sample (not an error for zero resultant).
double resultant_length(const DirectionalSample& sample);

// Depth at angles 2*pi*k/grid, k = 0..grid-1, for a circle sample.
std::vector<std::pair<double, double>> depth_profile_circle(const DeltaSpec& spec,
                                                            const DirectionalSample& sample,
                                                            int grid);

// Population depth of +/-theta0 under vMF(theta0, kappa) on S^{q-1}:
// d_sup - E[delta(+/-V)] with V the cosine to the mode, by quadrature.
double vmf_population_depth(const DeltaSpec& spec, int q, double kappa, bool at_mode,
                            const QuadratureSpec& qspec = {});

// Population depth on the circle at a point whose angle to the vMF mode is
// rel_angle (any angle, not just 0 or pi). The integral is split at the kernel
// kinks so each piece is smooth.
double vmf_population_depth_circle(const DeltaSpec& spec, double kappa, double rel_angle,
                                   const QuadratureSpec& qspec = {});

} // namespace dirdepth
