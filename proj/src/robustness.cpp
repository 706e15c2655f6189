#include "dirdepth/robustness.hpp"

#include <algorithm>
#include <cmath>

namespace dirdepth {

double bdp_lower_bound_vmf(const DeltaSpec& spec, int q, double kappa,
                           const QuadratureSpec& qspec) {
    if (kappa <= 0.0) throw Error("bdp bound requires kappa > 0");
    const double gap =
        rotsym_expectation([&](double v) { return spec(-v) - spec(v); }, q, kappa, qspec);
    return gap / (2.0 * spec.d_sup());
}

double bdp_lower_bound_empirical(const DeltaSpec& spec, const DirectionalSample& sample,
                                 const UnitVector& theta_hat) {
    const double at = depth(spec, theta_hat, sample).value;
    const double anti = depth(spec, theta_hat.negated(), sample).value;
    return (at - anti) / (2.0 * spec.d_sup());
}

std::vector<std::pair<double, double>> max_depth_curve(const DeltaSpec& spec, int q,
                                                       const std::vector<double>& kappa_grid,
                                                       const QuadratureSpec& qspec) {
    double prev = 0.0;
    bool first = true;
    std::vector<std::pair<double, double>> out;
    out.reserve(kappa_grid.size());
    for (double kappa : kappa_grid) {
        if (kappa <= 0.0) throw ConfigError("kappa grid values must be positive");
        if (!first && kappa <= prev) throw ConfigError("kappa grid must be increasing");
        out.emplace_back(kappa, vmf_population_depth(spec, q, kappa, true, qspec));
        prev = kappa;
        first = false;
    }
    return out;
}

double depth_variance(const DeltaSpec& spec, bool at_mode, int q, double kappa,
                      const QuadratureSpec& qspec) {
    const double sign = at_mode ? 1.0 : -1.0;
    const double m1 = rotsym_expectation([&](double v) { return spec(sign * v); }, q, kappa, qspec);
    const double m2 = rotsym_expectation(
        [&](double v) {
            const double d = spec(sign * v);
            return d * d;
        },
        q, kappa, qspec);
    return std::max(0.0, m2 - m1 * m1);
}

double constancy_diagnostic(const DeltaSpec& spec, const DirectionalSample& sample, int grid) {
    if (sample.dim() != 2) throw NotCircle(sample.dim());
    const auto profile = depth_profile_circle(spec, sample, grid);
    double lo = profile.front().second, hi = lo;
    for (const auto& [angle, d] : profile) {
        lo = std::min(lo, d);
        hi = std::max(hi, d);
    }
    return hi - lo;
}

double constancy_diagnostic(const DeltaSpec& spec, const DirectionalSample& sample,
                            const std::vector<UnitVector>& eval_points) {
    if (eval_points.empty()) throw ConfigError("constancy diagnostic needs evaluation points");
    double lo = depth(spec, eval_points.front(), sample).value, hi = lo;
    for (const UnitVector& p : eval_points) {
        const double d = depth(spec, p, sample).value;
        lo = std::min(lo, d);
        hi = std::max(hi, d);
    }
    return hi - lo;
}

} // namespace dirdepth
