#include "dirdepth/deepest.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "dirdepth/depth.hpp"

namespace dirdepth {

namespace {

constexpr double kPi = 3.14159265358979323846264338328;
constexpr double kTwoPi = 2.0 * kPi;

// Mean distance objective f(theta) = (1/n) sum delta(theta . W_i); depth is
// d_sup - f, so minimizing f maximizes depth.
double objective(const DeltaSpec& spec, const std::vector<double>& theta,
                 const DirectionalSample& sample) {
    const int q = sample.dim();
    double sum = 0.0;
    for (const UnitVector& w : sample) {
        double t = 0.0;
        for (int i = 0; i < q; ++i) t += theta[static_cast<std::size_t>(i)] * w[i];
        sum += spec(t);
    }
    return sum / sample.n();
}

// Ambient gradient of the objective. delta' is singular at t = 1 for the arc
// and chord kernels; inner products are clamped and near-coincident terms are
// dropped since they carry no usable descent direction.
std::vector<double> gradient(const DeltaSpec& spec, const std::vector<double>& theta,
                             const DirectionalSample& sample) {
    const int q = sample.dim();
    std::vector<double> g(static_cast<std::size_t>(q), 0.0);
    for (const UnitVector& w : sample) {
        double t = 0.0;
        for (int i = 0; i < q; ++i) t += theta[static_cast<std::size_t>(i)] * w[i];
        if (t > 1.0 - 1e-9) continue;
        t = std::clamp(t, -1.0 + 1e-12, 1.0 - 1e-12);
        const double d = spec.derivative(t);
        for (int i = 0; i < q; ++i) g[static_cast<std::size_t>(i)] += d * w[i];
    }
    for (double& x : g) x /= sample.n();
    return g;
}

void normalize_inplace(std::vector<double>& v) {
    double nrm = 0.0;
    for (double x : v) nrm += x * x;
    nrm = std::sqrt(nrm);
    for (double& x : v) x /= nrm;
}

bool lex_less(const std::vector<double>& a, const std::vector<double>& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

struct Descent {
    std::vector<double> point;
    double value;
    int iterations;
};

Descent descend(const DeltaSpec& spec, std::vector<double> theta, double f,
                const DirectionalSample& sample, const DeepestOptions& opts) {
    int iters = 0;
    for (; iters < opts.max_iter; ++iters) {
        const std::vector<double> g = gradient(spec, theta, sample);
        const double tdotg = std::inner_product(theta.begin(), theta.end(), g.begin(), 0.0);
        std::vector<double> gt(g);
        double gt_norm2 = 0.0;
        for (std::size_t i = 0; i < gt.size(); ++i) {
            gt[i] -= tdotg * theta[i];
            gt_norm2 += gt[i] * gt[i];
        }
        if (std::sqrt(gt_norm2) <= opts.grad_tol) break;

        // Backtracking line search with sufficient decrease.
        bool moved = false;
        double step = 1.0;
        for (int h = 0; h < 50; ++h, step *= 0.5) {
            std::vector<double> trial(theta);
            for (std::size_t i = 0; i < trial.size(); ++i) trial[i] -= step * gt[i];
            normalize_inplace(trial);
            const double ftrial = objective(spec, trial, sample);
            if (ftrial <= f - 1e-4 * step * gt_norm2) {
                theta = std::move(trial);
                f = ftrial;
                moved = true;
                break;
            }
        }
        if (!moved) break;
    }
    return {std::move(theta), f, iters};
}

} // namespace

DeepestResult deepest(const DeltaSpec& spec, const DirectionalSample& sample,
                      const DeepestOptions& opts) {
    const int q = sample.dim();

    if (spec.kind() == DeltaKind::cos) {
        // Exact maximizer of the closed form 1 + theta . Wbar.
        UnitVector mean = [&] {
            try {
                return spherical_mean(sample);
            } catch (const NullResultant&) {
                throw ConstantDepth(
                    "cosine depth is constant (zero resultant); every point is deepest");
            }
        }();
        const double d = depth(spec, mean, sample).value;
        return DeepestResult{std::move(mean), d, 0, 1};
    }

    // Candidate starts: every sample point, the spherical mean when defined,
    // and an angular grid on the circle.
    std::vector<std::vector<double>> candidates;
    candidates.reserve(static_cast<std::size_t>(sample.n()) + 361);
    for (const UnitVector& w : sample) candidates.push_back(w.coords());
    try {
        candidates.push_back(spherical_mean(sample).coords());
    } catch (const NullResultant&) {
    }
    if (q == 2) {
        for (int k = 0; k < opts.circle_grid_starts; ++k) {
            const double a = kTwoPi * k / opts.circle_grid_starts;
            candidates.push_back({std::cos(a), std::sin(a)});
        }
    }

    std::vector<double> values(candidates.size());
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        values[i] = objective(spec, candidates[i], sample);
    }

    std::vector<std::size_t> order(candidates.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (values[a] != values[b]) return values[a] < values[b];
        return lex_less(candidates[a], candidates[b]);
    });

    // Best unpolished candidate first; this keeps the returned depth >= the
    // depth at every sample point even when only the top starts are polished.
    std::vector<double> best_point = candidates[order.front()];
    double best_value = values[order.front()];
    int total_iters = 0;

    const std::size_t n_polish =
        opts.polish_starts > 0
            ? std::min(candidates.size(), static_cast<std::size_t>(opts.polish_starts))
            : candidates.size();
    for (std::size_t r = 0; r < n_polish; ++r) {
        const std::size_t idx = order[r];
        Descent d = descend(spec, candidates[idx], values[idx], sample, opts);
        total_iters += d.iterations;
        if (d.value < best_value - 1e-12) {
            best_value = d.value;
            best_point = std::move(d.point);
        } else if (d.value < best_value + 1e-12 && lex_less(d.point, best_point)) {
            best_point = std::move(d.point);
            best_value = std::min(best_value, d.value);
        }
    }

    UnitVector point = UnitVector::from_components(best_point);
    const double dval = depth(spec, point, sample).value;
    return DeepestResult{std::move(point), dval, total_iters,
                         static_cast<long>(candidates.size())};
}

DeepestResult deepest_circle_grid(const DeltaSpec& spec, const DirectionalSample& sample,
                                  long resolution) {
    if (sample.dim() != 2) throw NotCircle(sample.dim());
    if (resolution < 360) throw ConfigError("grid resolution must be at least 360");

    const int n = sample.n();
    std::vector<double> ang(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) ang[static_cast<std::size_t>(i)] = sample[i].angle();

    // Angle-native kernel forms avoid an arccos round trip in the hot loop.
    const DeltaKind kind = spec.kind();
    const auto delta_of_gap = [&](double g) {
        // g in [0, pi]
        switch (kind) {
            case DeltaKind::arc: return g;
            case DeltaKind::cos: return 1.0 - std::cos(g);
            case DeltaKind::chord: return 2.0 * std::sin(0.5 * g);
            case DeltaKind::custom: return spec(std::cos(g));
        }
        return 0.0;
    };

    long best_k = 0;
    double best_sum = std::numeric_limits<double>::infinity();
    for (long k = 0; k < resolution; ++k) {
        const double alpha = kTwoPi * static_cast<double>(k) / static_cast<double>(resolution);
        double sum = 0.0;
        for (double a : ang) {
            double g = std::fabs(alpha - a);
            if (g > kPi) g = kTwoPi - g;
            sum += delta_of_gap(g);
        }
        if (sum < best_sum) {
            best_sum = sum;
            best_k = k;
        }
    }
    const double alpha = kTwoPi * static_cast<double>(best_k) / static_cast<double>(resolution);
    UnitVector point = UnitVector::from_angle(alpha);
    const double dval = depth(spec, point, sample).value;
    return DeepestResult{std::move(point), dval, 0, resolution};
}

} // namespace dirdepth
