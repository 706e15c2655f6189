#include "dirdepth/depth.hpp"

#include <cmath>

namespace dirdepth {

namespace {
constexpr double kPi = 3.14159265358979323846264338328;
constexpr double kTwoPi = 2.0 * kPi;
} // namespace

DepthValue depth(const DeltaSpec& spec, const UnitVector& theta, const DirectionalSample& sample) {
    if (theta.dim() != sample.dim()) throw DimMismatch(theta.dim(), sample.dim());
    double sum = 0.0;
    for (const UnitVector& w : sample) sum += spec(inner(theta, w));
    return DepthValue{spec.d_sup() - sum / sample.n(), theta, spec.kind()};
}

DepthValue depth_cos_closed(const UnitVector& theta, const DirectionalSample& sample) {
    if (theta.dim() != sample.dim()) throw DimMismatch(theta.dim(), sample.dim());
    double dot = 0.0;
    for (int i = 0; i < theta.dim(); ++i) {
        double mean_i = 0.0;
        for (const UnitVector& w : sample) mean_i += w[i];
        dot += theta[i] * (mean_i / sample.n());
    }
    return DepthValue{1.0 + dot, theta, DeltaKind::cos};
}

double resultant_length(const DirectionalSample& sample) {
    double s = 0.0;
    for (int i = 0; i < sample.dim(); ++i) {
        double mean_i = 0.0;
        for (const UnitVector& w : sample) mean_i += w[i];
        mean_i /= sample.n();
        s += mean_i * mean_i;
    }
    return std::sqrt(s);
}

UnitVector spherical_mean(const DirectionalSample& sample) {
    std::vector<double> mean(static_cast<std::size_t>(sample.dim()), 0.0);
    for (const UnitVector& w : sample) {
        for (int i = 0; i < sample.dim(); ++i) mean[static_cast<std::size_t>(i)] += w[i];
    }
    double nrm = 0.0;
    for (double& x : mean) {
        x /= sample.n();
        nrm += x * x;
    }
    if (std::sqrt(nrm) < 1e-12) throw NullResultant();
    return UnitVector::from_components(mean);
}

std::vector<std::pair<double, double>> depth_profile_circle(const DeltaSpec& spec,
                                                            const DirectionalSample& sample,
                                                            int grid) {
    if (sample.dim() != 2) throw NotCircle(sample.dim());
    if (grid < 4) throw ConfigError("profile grid must have at least 4 points");
    std::vector<std::pair<double, double>> out;
    out.reserve(static_cast<std::size_t>(grid));
    for (int k = 0; k < grid; ++k) {
        const double alpha = kTwoPi * k / grid;
        out.emplace_back(alpha, depth(spec, UnitVector::from_angle(alpha), sample).value);
    }
    return out;
}

double vmf_population_depth(const DeltaSpec& spec, int q, double kappa, bool at_mode,
                            const QuadratureSpec& qspec) {
    if (kappa <= 0.0) throw Error("vmf_population_depth requires kappa > 0");
    const double sign = at_mode ? 1.0 : -1.0;
    const double mean = rotsym_expectation([&](double v) { return spec(sign * v); }, q, kappa, qspec);
    return spec.d_sup() - mean;
}

double vmf_population_depth_circle(const DeltaSpec& spec, double kappa, double rel_angle,
                                   const QuadratureSpec& qspec) {
    if (kappa < 0.0) throw Error("kappa must be nonnegative");
    if (kappa == 0.0) {
        // Uniform: constant depth d_sup - mean of delta over the circle.
        const double mean = integrate_adaptive(
                                [&](double g) { return spec(std::cos(g)); }, 0.0, kPi, qspec) /
                            kPi;
        return spec.d_sup() - mean;
    }
    const auto weight = [&](double beta) { return std::exp(kappa * (std::cos(beta) - 1.0)); };
    // delta(cos(beta - a)) has kinks at beta = a and beta = a +/- pi, so the
    // numerator is integrated piecewise.
    const double a = rel_angle;
    const auto f = [&](double beta) { return spec(std::cos(beta - a)) * weight(beta); };
    const double num = integrate_adaptive(f, a - kPi, a, qspec) + integrate_adaptive(f, a, a + kPi, qspec);
    const double den = integrate_adaptive(weight, 0.0, kPi, qspec) +
                       integrate_adaptive(weight, kPi, kTwoPi, qspec);
    return spec.d_sup() - num / den;
}

} // namespace dirdepth
