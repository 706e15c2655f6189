#include <doctest.h>

#include <cmath>
#include <vector>

#include "dirdepth/depth.hpp"
#include "dirdepth/rng.hpp"
#include "dirdepth/sampling.hpp"

using namespace dirdepth;

namespace {

constexpr double kPi = 3.14159265358979323846264338328;

DirectionalSample random_sample(int q, int n, std::uint64_t seed) {
    return sample_uniform(q, n, seed);
}

} // namespace

TEST_CASE("depth by direct averaging sits in [0, d_sup]") {
    const DirectionalSample sample = random_sample(3, 40, 1);
    for (const DeltaSpec& spec : {DeltaSpec::arc(), DeltaSpec::cosine(), DeltaSpec::chord()}) {
        const double d = depth(spec, UnitVector::axis(3, 1), sample).value;
        CHECK(d >= 0.0);
        CHECK(d <= spec.d_sup());
    }
}

TEST_CASE("depth of a one-point sample at the point is d_sup") {
    const DirectionalSample sample({UnitVector::axis(4, 2)});
    for (const DeltaSpec& spec : {DeltaSpec::arc(), DeltaSpec::cosine(), DeltaSpec::chord()}) {
        CHECK(depth(spec, UnitVector::axis(4, 2), sample).value ==
              doctest::Approx(spec.d_sup()).epsilon(1e-14));
        CHECK(depth(spec, UnitVector::axis(4, 2).negated(), sample).value ==
              doctest::Approx(0.0).epsilon(1e-14));
    }
}

TEST_CASE("cosine closed form equals the averaged depth") {
    for (std::uint64_t s = 0; s < 20; ++s) {
        const int q = 2 + static_cast<int>(s % 4);
        const DirectionalSample sample = random_sample(q, 30, 100 + s);
        const UnitVector theta = random_sample(q, 1, 200 + s)[0];
        CHECK(std::abs(depth_cos_closed(theta, sample).value -
                       depth(DeltaSpec::cosine(), theta, sample).value) < 1e-12);
    }
}

TEST_CASE("hand-computed circle depths") {
    // two points at angles 0 and pi/2, theta at 0
    const DirectionalSample sample({UnitVector::from_angle(0.0), UnitVector::from_angle(kPi / 2)});
    const UnitVector theta = UnitVector::from_angle(0.0);
    CHECK(depth(DeltaSpec::arc(), theta, sample).value ==
          doctest::Approx(kPi - 0.5 * (0.0 + kPi / 2)).epsilon(1e-14));
    CHECK(depth(DeltaSpec::cosine(), theta, sample).value ==
          doctest::Approx(2.0 - 0.5 * (0.0 + 1.0)).epsilon(1e-14));
    CHECK(depth(DeltaSpec::chord(), theta, sample).value ==
          doctest::Approx(2.0 - 0.5 * (0.0 + std::sqrt(2.0))).epsilon(1e-14));
}

TEST_CASE("anti-symmetry identity for arc and cos, broken for chord") {
    const DirectionalSample sample = random_sample(3, 25, 7);
    const UnitVector theta = random_sample(3, 1, 8)[0];
    for (const DeltaSpec& spec : {DeltaSpec::arc(), DeltaSpec::cosine()}) {
        const double sum = depth(spec, theta, sample).value +
                           depth(spec, theta.negated(), sample).value;
        CHECK(sum == doctest::Approx(spec.d_sup()).epsilon(1e-13));
    }
    const DeltaSpec chord = DeltaSpec::chord();
    const double sum = depth(chord, theta, sample).value +
                       depth(chord, theta.negated(), sample).value;
    CHECK(std::abs(sum - chord.d_sup()) > 1e-3);
}

TEST_CASE("spherical mean and resultant length") {
    const DirectionalSample sample({UnitVector::from_angle(0.3), UnitVector::from_angle(-0.3)});
    const UnitVector mean = spherical_mean(sample);
    CHECK(mean[0] == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(mean[1] == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(resultant_length(sample) == doctest::Approx(std::cos(0.3)).epsilon(1e-14));

    const DirectionalSample antipodal({UnitVector::from_angle(1.0),
                                       UnitVector::from_angle(1.0 + kPi)});
    CHECK(resultant_length(antipodal) == doctest::Approx(0.0).epsilon(1e-14));
    CHECK_THROWS_AS(spherical_mean(antipodal), NullResultant);
}

TEST_CASE("circle profile matches pointwise evaluation") {
    const DirectionalSample sample = sample_vmf(VmfModel(2, UnitVector::from_angle(1.0), 3.0),
                                                50, 99);
    const auto profile = depth_profile_circle(DeltaSpec::arc(), sample, 36);
    REQUIRE(profile.size() == 36);
    for (const auto& [angle, value] : profile) {
        CHECK(value == doctest::Approx(
                  depth(DeltaSpec::arc(), UnitVector::from_angle(angle), sample).value)
                  .epsilon(1e-14));
    }
}

TEST_CASE("population depth at the mode: cosine closed form 1 + A_q(kappa)") {
    for (double kappa : {0.5, 2.0, 5.0}) {
        const double a3 = 1.0 / std::tanh(kappa) - 1.0 / kappa;
        CHECK(vmf_population_depth(DeltaSpec::cosine(), 3, kappa, true) ==
              doctest::Approx(1.0 + a3).epsilon(1e-10));
        CHECK(vmf_population_depth(DeltaSpec::cosine(), 3, kappa, false) ==
              doctest::Approx(1.0 - a3).epsilon(1e-10));
    }
}

TEST_CASE("population depth agrees with a large Monte Carlo estimate") {
    const int q = 3;
    const double kappa = 5.0;
    const UnitVector mode = UnitVector::axis(q, q);
    const DirectionalSample sample = sample_vmf(VmfModel(q, mode, kappa), 200000, 4242);
    for (const DeltaSpec& spec : {DeltaSpec::arc(), DeltaSpec::chord()}) {
        const double mc = depth(spec, mode, sample).value;
        const double quad = vmf_population_depth(spec, q, kappa, true);
        CHECK(mc == doctest::Approx(quad).epsilon(0.005));
    }
}

TEST_CASE("circle population depth: general angle interpolates the endpoints") {
    const double kappa = 2.0;
    for (const DeltaSpec& spec : {DeltaSpec::arc(), DeltaSpec::cosine(), DeltaSpec::chord()}) {
        const double at_mode = vmf_population_depth_circle(spec, kappa, 0.0);
        const double at_anti = vmf_population_depth_circle(spec, kappa, kPi);
        CHECK(at_mode == doctest::Approx(vmf_population_depth(spec, 2, kappa, true)).epsilon(1e-9));
        CHECK(at_anti == doctest::Approx(vmf_population_depth(spec, 2, kappa, false)).epsilon(1e-9));
        const double mid = vmf_population_depth_circle(spec, kappa, kPi / 3);
        CHECK(mid < at_mode);
        CHECK(mid > at_anti);
    }
}

TEST_CASE("circle population depth matches Monte Carlo at a general angle") {
    const double kappa = 2.0;
    const UnitVector mode = UnitVector::from_angle(0.0);
    const DirectionalSample sample = sample_vmf(VmfModel(2, mode, kappa), 200000, 777);
    const double rel = 1.1;
    for (const DeltaSpec& spec : {DeltaSpec::arc(), DeltaSpec::cosine(), DeltaSpec::chord()}) {
        const double mc = depth(spec, UnitVector::from_angle(rel), sample).value;
        CHECK(vmf_population_depth_circle(spec, kappa, rel) == doctest::Approx(mc).epsilon(0.01));
    }
}

TEST_CASE("rotational invariance of the depth") {
    const DirectionalSample sample = random_sample(4, 30, 5);
    const UnitVector theta = random_sample(4, 1, 6)[0];
    const Rotation rot = random_rotation(4, 90);
    for (const DeltaSpec& spec : {DeltaSpec::arc(), DeltaSpec::cosine(), DeltaSpec::chord()}) {
        CHECK(depth(spec, rot.apply(theta), rot.apply(sample)).value ==
              doctest::Approx(depth(spec, theta, sample).value).epsilon(1e-12));
    }
}
