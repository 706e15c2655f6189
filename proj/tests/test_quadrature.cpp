#include <doctest.h>

#include <cmath>

#include "dirdepth/quadrature.hpp"

using namespace dirdepth;

namespace {
constexpr double kPi = 3.14159265358979323846264338328;
}

TEST_CASE("gauss rule integrates polynomials of degree 2n-1 exactly") {
    // order 5 handles degree 9: int_{-1}^{1} t^8 dt = 2/9
    const auto f = [](double t) { return std::pow(t, 8.0); };
    CHECK(gauss_integrate(f, -1.0, 1.0, 5) == doctest::Approx(2.0 / 9.0).epsilon(1e-14));
    // weights sum to the interval length
    const GaussLegendreRule& rule = gauss_legendre(32);
    double wsum = 0.0;
    for (double w : rule.weights) wsum += w;
    CHECK(wsum == doctest::Approx(2.0).epsilon(1e-14));
}

TEST_CASE("adaptive integration against closed forms") {
    CHECK(integrate_adaptive([](double x) { return std::sin(x); }, 0.0, kPi) ==
          doctest::Approx(2.0).epsilon(1e-12));
    CHECK(integrate_adaptive([](double x) { return std::exp(-x); }, 0.0, 20.0) ==
          doctest::Approx(1.0 - std::exp(-20.0)).epsilon(1e-12));
}

TEST_CASE("adaptive integration reports non-convergence") {
    QuadratureSpec tight;
    tight.rel_tol = 1e-16;
    tight.max_order = 128;
    // |x| has a kink at 0; with an absurd tolerance the doubling runs out
    CHECK_THROWS_AS(integrate_adaptive([](double x) { return std::abs(std::sin(50.0 * x)); },
                                       -1.0, 1.0, tight),
                    QuadratureFailure);
}

TEST_CASE("rotsym expectation of a constant is the constant") {
    for (int q : {2, 3, 5, 10}) {
        for (double kappa : {0.0, 1.0, 50.0}) {
            CHECK(rotsym_expectation([](double) { return 3.5; }, q, kappa) ==
                  doctest::Approx(3.5).epsilon(1e-12));
        }
    }
}

TEST_CASE("rotsym expectation matches the q=3 closed form coth(k)-1/k") {
    for (double kappa : {0.5, 2.0, 5.0, 20.0}) {
        const double oracle = 1.0 / std::tanh(kappa) - 1.0 / kappa;
        CHECK(rotsym_expectation([](double v) { return v; }, 3, kappa) ==
              doctest::Approx(oracle).epsilon(1e-10));
    }
}

TEST_CASE("rotsym expectation under the uniform law (kappa=0)") {
    // E[V] = 0 by symmetry; E[V^2] = 1/q
    for (int q : {2, 3, 4, 7}) {
        CHECK(std::abs(rotsym_expectation([](double v) { return v; }, q, 0.0)) < 1e-12);
        CHECK(rotsym_expectation([](double v) { return v * v; }, q, 0.0) ==
              doctest::Approx(1.0 / q).epsilon(1e-10));
    }
}

TEST_CASE("rotsym expectation survives large kappa") {
    const double m = rotsym_expectation([](double v) { return v; }, 3, 500.0);
    CHECK(m > 0.99);
    CHECK(m < 1.0);
}
