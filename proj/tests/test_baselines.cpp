#include <doctest.h>

#include <cmath>
#include <vector>

#include "dirdepth/baselines.hpp"
#include "dirdepth/rng.hpp"
#include "dirdepth/sampling.hpp"

using namespace dirdepth;

namespace {

constexpr double kPi = 3.14159265358979323846264338328;
constexpr double kTwoPi = 2.0 * kPi;

double wrap(double a) {
    a = std::fmod(a, kTwoPi);
    return a < 0.0 ? a + kTwoPi : a;
}

// Closed-arc membership, tolerating endpoint roundoff.
bool in_closed_arc(double x, double lo, double len) {
    const double d = wrap(x - lo);
    return d <= len + 1e-9 || d >= kTwoPi - 1e-9;
}

// Brute-force angular Tukey depth: scan half-circle start angles on a dense
// grid seeded with every data angle (plus tiny offsets), keep the smallest
// mass among half-circles containing theta.
double atd_brute(const UnitVector& theta, const DirectionalSample& sample) {
    const double t = theta.angle();
    std::vector<double> starts;
    for (const UnitVector& p : sample) {
        for (double off : {-1e-7, 0.0, 1e-7}) {
            starts.push_back(wrap(p.angle() + off));
            starts.push_back(wrap(p.angle() - kPi + off));
        }
    }
    for (double off : {-1e-7, 0.0, 1e-7}) {
        starts.push_back(wrap(t + off));
        starts.push_back(wrap(t - kPi + off));
    }
    for (int k = 0; k < 5000; ++k) starts.push_back(kTwoPi * k / 5000.0);

    double best = 1.0;
    for (double lo : starts) {
        if (!in_closed_arc(t, lo, kPi)) continue;
        int count = 0;
        for (const UnitVector& p : sample) count += in_closed_arc(p.angle(), lo, kPi) ? 1 : 0;
        best = std::min(best, static_cast<double>(count) / sample.n());
    }
    return best;
}

// Brute-force angular simplicial depth over all data pairs.
double asd_brute(const UnitVector& theta, const DirectionalSample& sample) {
    const double t = theta.angle();
    const int n = sample.n();
    long hits = 0;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const double a = sample[i].angle(), b = sample[j].angle();
            double gap = wrap(b - a);
            if (std::abs(gap - kPi) <= 1e-12) continue; // antipodal pair: no shorter arc
            if (gap <= kPi) {
                hits += in_closed_arc(t, a, gap) ? 1 : 0;
            } else {
                hits += in_closed_arc(t, b, kTwoPi - gap) ? 1 : 0;
            }
        }
    }
    return static_cast<double>(hits) / (static_cast<double>(n) * (n - 1) / 2.0);
}

DirectionalSample circle_sample(int n, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<UnitVector> pts;
    for (int i = 0; i < n; ++i) pts.push_back(UnitVector::from_angle(kTwoPi * rng.uniform()));
    return DirectionalSample(std::move(pts));
}

} // namespace

TEST_CASE("three equally spaced points") {
    const DirectionalSample sample({UnitVector::from_angle(0.0),
                                    UnitVector::from_angle(kTwoPi / 3),
                                    UnitVector::from_angle(2 * kTwoPi / 3)});
    const UnitVector theta = UnitVector::from_angle(0.0);
    CHECK(atd_circle(theta, sample) == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
    CHECK(asd_circle(theta, sample) == doctest::Approx(2.0 / 3.0).epsilon(1e-14));
    CHECK(atd_brute(theta, sample) == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
    CHECK(asd_brute(theta, sample) == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("point mass at the antipode gives zero Tukey depth") {
    const UnitVector theta = UnitVector::from_angle(0.5);
    const DirectionalSample sample({theta.negated()});
    // a closed half-circle containing theta can exclude the antipode entirely
    CHECK(atd_circle(theta, sample) == doctest::Approx(0.0).epsilon(1e-14));
}

TEST_CASE("antipodal pairs carry no simplicial mass") {
    const DirectionalSample sample({UnitVector::from_angle(0.0), UnitVector::from_angle(kPi)});
    CHECK(asd_circle(UnitVector::from_angle(kPi / 2), sample) == 0.0);
    CHECK(asd_circle(UnitVector::from_angle(0.0), sample) == 0.0);
}

TEST_CASE("atd matches the brute-force scan on random data") {
    for (std::uint64_t s = 0; s < 8; ++s) {
        const DirectionalSample sample = circle_sample(9 + static_cast<int>(s), 300 + s);
        Rng rng(400 + s);
        for (int k = 0; k < 10; ++k) {
            const UnitVector theta = UnitVector::from_angle(kTwoPi * rng.uniform());
            CHECK(atd_circle(theta, sample) ==
                  doctest::Approx(atd_brute(theta, sample)).epsilon(1e-12));
        }
        // at data points too (boundary cases)
        for (int i = 0; i < sample.n(); ++i) {
            CHECK(atd_circle(sample[i], sample) ==
                  doctest::Approx(atd_brute(sample[i], sample)).epsilon(1e-12));
        }
    }
}

TEST_CASE("asd matches the brute-force pair count on random data") {
    for (std::uint64_t s = 0; s < 8; ++s) {
        const DirectionalSample sample = circle_sample(12, 500 + s);
        Rng rng(600 + s);
        for (int k = 0; k < 10; ++k) {
            const UnitVector theta = UnitVector::from_angle(kTwoPi * rng.uniform());
            CHECK(asd_circle(theta, sample) ==
                  doctest::Approx(asd_brute(theta, sample)).epsilon(1e-12));
        }
    }
}

TEST_CASE("baselines reject non-circle input") {
    const DirectionalSample sample({UnitVector::axis(3, 1), UnitVector::axis(3, 2)});
    CHECK_THROWS_AS(atd_circle(UnitVector::axis(3, 1), sample), NotCircle);
    CHECK_THROWS_AS(asd_circle(UnitVector::axis(3, 1), sample), NotCircle);
}
