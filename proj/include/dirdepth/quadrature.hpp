#pragma once

#include <functional>
#include <vector>

#include "dirdepth/errors.hpp"

namespace dirdepth {

struct QuadratureSpec {
    double rel_tol = 1e-10;
    int max_order = 4096;
};

struct GaussLegendreRule {
    std::vector<double> nodes;   // on [-1, 1]
    std::vector<double> weights;
};

// Nodes/weights for the given order, computed by Newton iteration on the
// Legendre recurrence and cached behind a mutex.
const GaussLegendreRule& gauss_legendre(int order);

// Integral of f over [a, b] at a fixed order.
double gauss_integrate(const std::function<double(double)>& f, double a, double b, int order);

// Integral of f over [a, b], order doubled from 64 until the successive
// relative change drops below rel_tol. Throws QuadratureFailure.
double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          const QuadratureSpec& spec = {});

// E[f(V)] where V = cos(angle to the mode) under a rotationally symmetric
// density on S^{q-1} with weight (1-v^2)^{(q-3)/2} exp(kappa*v):
//
//   int f(v) (1-v^2)^{(q-3)/2} e^{kv} dv / int (1-v^2)^{(q-3)/2} e^{kv} dv.
//
// Integrates in the substituted variable v = cos u (integrand
// f(cos u) sin^{q-2}(u) e^{k cos u} on [0, pi]), which removes the endpoint
// singularity of the raw weight at q = 2. The exponential is scaled by e^{-k}
// inside both integrals, so kappa up to ~700 is safe.
double rotsym_expectation(const std::function<double(double)>& f, int q, double kappa,
                          const QuadratureSpec& spec = {});

} // namespace dirdepth
