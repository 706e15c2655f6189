#include <doctest.h>

#include <cmath>
#include <vector>

#include "dirdepth/rng.hpp"

using namespace dirdepth;

TEST_CASE("rng streams are deterministic and seed-separated") {
    Rng a(12345), b(12345), c(54321);
    bool all_equal = true, any_equal = false;
    for (int i = 0; i < 1000; ++i) {
        const std::uint64_t x = a.next_u64();
        all_equal = all_equal && x == b.next_u64();
        any_equal = any_equal || x == c.next_u64();
    }
    CHECK(all_equal);
    CHECK_FALSE(any_equal);
}

TEST_CASE("substream keys differ from the base and from each other") {
    CHECK(substream(7, 0) != substream(7, 1));
    CHECK(substream(7, 0) != 7);
    CHECK(substream(7, 0) != substream(8, 0));
}

TEST_CASE("uniform stays in [0,1) and uniform_pos in (0,1]") {
    Rng r(99);
    for (int i = 0; i < 10000; ++i) {
        const double u = r.uniform();
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
        const double v = r.uniform_pos();
        CHECK(v > 0.0);
        CHECK(v <= 1.0);
    }
}

TEST_CASE("uniform mean and variance match 1/2 and 1/12") {
    Rng r(2024);
    const int n = 200000;
    double s = 0.0, s2 = 0.0;
    for (int i = 0; i < n; ++i) {
        const double u = r.uniform();
        s += u;
        s2 += u * u;
    }
    const double mean = s / n;
    const double var = s2 / n - mean * mean;
    CHECK(mean == doctest::Approx(0.5).epsilon(0.01));
    CHECK(var == doctest::Approx(1.0 / 12.0).epsilon(0.02));
}

TEST_CASE("normal moments") {
    Rng r(31337);
    const int n = 200000;
    double s = 0.0, s2 = 0.0, s3 = 0.0;
    for (int i = 0; i < n; ++i) {
        const double x = r.normal();
        s += x;
        s2 += x * x;
        s3 += x * x * x;
    }
    CHECK(std::abs(s / n) < 0.01);
    CHECK(s2 / n == doctest::Approx(1.0).epsilon(0.02));
    CHECK(std::abs(s3 / n) < 0.05);
}

TEST_CASE("gamma mean and variance equal the shape") {
    for (double shape : {0.5, 2.0, 7.3}) {
        Rng r(static_cast<std::uint64_t>(shape * 1000));
        const int n = 100000;
        double s = 0.0, s2 = 0.0;
        for (int i = 0; i < n; ++i) {
            const double x = r.gamma(shape);
            s += x;
            s2 += x * x;
        }
        const double mean = s / n;
        CHECK(mean == doctest::Approx(shape).epsilon(0.03));
        CHECK(s2 / n - mean * mean == doctest::Approx(shape).epsilon(0.06));
    }
}

TEST_CASE("beta(a,b) mean is a/(a+b)") {
    Rng r(555);
    const double a = 1.5, b = 1.5;
    const int n = 100000;
    double s = 0.0;
    for (int i = 0; i < n; ++i) s += r.beta(a, b);
    CHECK(s / n == doctest::Approx(a / (a + b)).epsilon(0.02));
}
