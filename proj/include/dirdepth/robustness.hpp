#pragma once

#include <utility>
#include <vector>

#include "dirdepth/depth.hpp"
#include "dirdepth/quadrature.hpp"
#include "dirdepth/sphere.hpp"

namespace dirdepth {

// Breakdown-point lower bound of the deepest point under vMF(theta0, kappa):
// (D(theta0) - D(-theta0)) / (2 d_sup), evaluated by quadrature.
double bdp_lower_bound_vmf(const DeltaSpec& spec, int q, double kappa,
                           const QuadratureSpec& qspec = {});

// Same bound from an empirical sample and its deepest point.
double bdp_lower_bound_empirical(const DeltaSpec& spec, const DirectionalSample& sample,
                                 const UnitVector& theta_hat);

// (kappa, maximal depth) pairs over an increasing positive kappa grid.
std::vector<std::pair<double, double>> max_depth_curve(const DeltaSpec& spec, int q,
                                                       const std::vector<double>& kappa_grid,
                                                       const QuadratureSpec& qspec = {});

// Var[d(theta, W)] for theta at the mode (at_mode) or its antipode, under
// vMF(theta0, kappa): E[delta(+/-V)^2] - E[delta(+/-V)]^2.
double depth_variance(const DeltaSpec& spec, bool at_mode, int q, double kappa,
                      const QuadratureSpec& qspec = {});

// max - min of the depth over a circular grid; near zero indicates a constant
// depth function.
double constancy_diagnostic(const DeltaSpec& spec, const DirectionalSample& sample, int grid);

// Same diagnostic over a caller-supplied evaluation set (any dimension).
double constancy_diagnostic(const DeltaSpec& spec, const DirectionalSample& sample,
                            const std::vector<UnitVector>& eval_points);

} // namespace dirdepth
