#include "dirdepth/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace dirdepth {

namespace {

constexpr double kPi = 3.14159265358979323846264338328;
constexpr double kTwoPi = 2.0 * kPi;
constexpr double kEps = 1e-12;

double wrap(double a) {
    a = std::fmod(a, kTwoPi);
    if (a < 0.0) a += kTwoPi;
    return a;
}

// Closed containment of angle x in the arc [a, a + len], modulo 2*pi.
bool in_closed_arc(double x, double a, double len) {
    double r = wrap(x - a);
    return r <= len + kEps || r >= kTwoPi - kEps;
}

// Number of sorted angles in the closed arc [a, a + pi], modulo 2*pi.
int count_half_circle(const std::vector<double>& sorted, double a) {
    a = wrap(a);
    const double hi = a + kPi;
    const auto count_range = [&](double lo, double up) {
        auto l = std::lower_bound(sorted.begin(), sorted.end(), lo - kEps);
        auto u = std::upper_bound(sorted.begin(), sorted.end(), up + kEps);
        return static_cast<int>(u - l);
    };
    if (hi <= kTwoPi) {
        int c = count_range(a, hi);
        // Wrapped images of the closed endpoints.
        if (a < kEps) c += count_range(kTwoPi + a - kEps, kTwoPi);
        if (hi > kTwoPi - kEps) c += count_range(0.0, hi - kTwoPi);
        return c;
    }
    return count_range(a, kTwoPi) + count_range(0.0, hi - kTwoPi);
}

} // namespace

double atd_circle(const UnitVector& theta, const DirectionalSample& sample) {
    if (sample.dim() != 2) throw NotCircle(sample.dim());
    const int n = sample.n();
    const double ta = theta.angle();

    std::vector<double> sorted;
    sorted.reserve(static_cast<std::size_t>(n));
    for (const UnitVector& w : sample) sorted.push_back(w.angle());
    std::sort(sorted.begin(), sorted.end());

    // The arc-start positions where the mass count or the theta-containment
    // constraint can change.
    std::vector<double> breaks;
    breaks.reserve(sorted.size() * 2 + 2);
    for (double a : sorted) {
        breaks.push_back(a);
        breaks.push_back(wrap(a - kPi));
    }
    breaks.push_back(ta);
    breaks.push_back(wrap(ta - kPi));
    std::sort(breaks.begin(), breaks.end());

    std::vector<double> candidates(breaks);
    for (std::size_t i = 0; i < breaks.size(); ++i) {
        const double cur = breaks[i];
        const double next = (i + 1 < breaks.size()) ? breaks[i + 1] : breaks.front() + kTwoPi;
        candidates.push_back(wrap(0.5 * (cur + next)));
    }

    int best = n;
    for (double a : candidates) {
        if (!in_closed_arc(ta, a, kPi)) continue;
        best = std::min(best, count_half_circle(sorted, a));
    }
    return static_cast<double>(best) / n;
}

double asd_circle(const UnitVector& theta, const DirectionalSample& sample) {
    if (sample.dim() != 2) throw NotCircle(sample.dim());
    const int n = sample.n();
    if (n < 2) throw SampleTooSmall("angular simplicial depth needs at least 2 points");
    const double ta = theta.angle();

    std::vector<double> ang;
    ang.reserve(static_cast<std::size_t>(n));
    for (const UnitVector& w : sample) ang.push_back(w.angle());

    long covered = 0;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            double gap = wrap(ang[static_cast<std::size_t>(j)] - ang[static_cast<std::size_t>(i)]);
            double start = ang[static_cast<std::size_t>(i)];
            if (gap > kPi) {
                start = ang[static_cast<std::size_t>(j)];
                gap = kTwoPi - gap;
            }
            if (std::abs(gap - kPi) <= kEps) continue; // antipodal pair: degenerate simplex
            if (in_closed_arc(ta, start, gap)) ++covered;
        }
    }
    const double pairs = 0.5 * n * (n - 1);
    return covered / pairs;
}

} // namespace dirdepth
