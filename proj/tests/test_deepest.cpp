#include <doctest.h>

#include <cmath>

#include "dirdepth/deepest.hpp"
#include "dirdepth/depth.hpp"
#include "dirdepth/sampling.hpp"

using namespace dirdepth;

namespace {
constexpr double kPi = 3.14159265358979323846264338328;
}

TEST_CASE("cosine deepest point is the spherical mean") {
    const DirectionalSample sample = sample_vmf(VmfModel(4, UnitVector::axis(4, 1), 3.0), 80, 10);
    const DeepestResult res = deepest(DeltaSpec::cosine(), sample);
    const UnitVector mean = spherical_mean(sample);
    for (int j = 0; j < 4; ++j) CHECK(res.point[j] == doctest::Approx(mean[j]).epsilon(1e-14));
    CHECK(res.depth == doctest::Approx(depth_cos_closed(mean, sample).value).epsilon(1e-12));
}

TEST_CASE("cosine deepest point of a null-resultant sample is undefined") {
    const DirectionalSample antipodal({UnitVector::from_angle(0.2),
                                       UnitVector::from_angle(0.2 + kPi)});
    CHECK_THROWS_AS(deepest(DeltaSpec::cosine(), antipodal), ConstantDepth);
}

TEST_CASE("optimizer dominates every sample point") {
    const DirectionalSample sample = sample_vmf(VmfModel(3, UnitVector::axis(3, 3), 2.0), 60, 20);
    for (const DeltaSpec& spec : {DeltaSpec::arc(), DeltaSpec::chord()}) {
        const DeepestResult res = deepest(spec, sample);
        for (int i = 0; i < sample.n(); ++i) {
            CHECK(res.depth >= depth(spec, sample[i], sample).value - 1e-10);
        }
    }
}

TEST_CASE("optimizer matches the grid oracle on the circle") {
    for (std::uint64_t s = 0; s < 5; ++s) {
        // odd n keeps the piecewise-linear arc profile free of flat plateau
        // maxima, so the argmax is unique and the angle comparison well-posed
        const DirectionalSample sample =
            sample_vmf(VmfModel(2, UnitVector::from_angle(1.5), 4.0), 41, 100 + s);
        for (const DeltaSpec& spec : {DeltaSpec::arc(), DeltaSpec::chord()}) {
            const DeepestResult opt = deepest(spec, sample);
            const DeepestResult grid = deepest_circle_grid(spec, sample, 200000);
            CHECK(geodesic_angle(opt.point, grid.point) < 1e-3);
            CHECK(opt.depth >= grid.depth - 1e-10);
        }
    }
}

TEST_CASE("deepest is deterministic") {
    const DirectionalSample sample = sample_vmf(VmfModel(3, UnitVector::axis(3, 1), 5.0), 50, 7);
    const DeepestResult a = deepest(DeltaSpec::arc(), sample);
    const DeepestResult b = deepest(DeltaSpec::arc(), sample);
    CHECK(a.point == b.point);
    CHECK(a.depth == b.depth);
}

TEST_CASE("single point sample: the point itself is deepest") {
    const DirectionalSample sample({UnitVector::axis(3, 2)});
    for (const DeltaSpec& spec : {DeltaSpec::arc(), DeltaSpec::cosine(), DeltaSpec::chord()}) {
        const DeepestResult res = deepest(spec, sample);
        CHECK(geodesic_angle(res.point, UnitVector::axis(3, 2)) < 1e-9);
        CHECK(res.depth == doctest::Approx(spec.d_sup()).epsilon(1e-9));
    }
}

TEST_CASE("grid oracle rejects non-circle samples and tiny resolutions") {
    const DirectionalSample sample({UnitVector::axis(3, 1)});
    CHECK_THROWS_AS(deepest_circle_grid(DeltaSpec::arc(), sample, 1000), NotCircle);
    const DirectionalSample circle({UnitVector::from_angle(0.0)});
    CHECK_THROWS_AS(deepest_circle_grid(DeltaSpec::arc(), circle, 10), Error);
}
