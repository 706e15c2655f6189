#include "dirdepth/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <string>

namespace dirdepth {

namespace {

constexpr double kPi = 3.14159265358979323846264338328;

GaussLegendreRule compute_rule(int n) {
    GaussLegendreRule rule;
    rule.nodes.assign(static_cast<std::size_t>(n), 0.0);
    rule.weights.assign(static_cast<std::size_t>(n), 0.0);
    const int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        double z = std::cos(kPi * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p1 = 1.0, p2 = 0.0;
            for (int j = 0; j < n; ++j) {
                const double p3 = p2;
                p2 = p1;
                p1 = ((2.0 * j + 1.0) * z * p2 - j * p3) / (j + 1.0);
            }
            pp = n * (z * p1 - p2) / (z * z - 1.0);
            const double z1 = z;
            z = z1 - p1 / pp;
            if (std::abs(z - z1) < 1e-15) break;
        }
        rule.nodes[static_cast<std::size_t>(i)] = -z;
        rule.nodes[static_cast<std::size_t>(n - 1 - i)] = z;
        const double w = 2.0 / ((1.0 - z * z) * pp * pp);
        rule.weights[static_cast<std::size_t>(i)] = w;
        rule.weights[static_cast<std::size_t>(n - 1 - i)] = w;
    }
    return rule;
}

} // namespace

const GaussLegendreRule& gauss_legendre(int order) {
    static std::mutex mtx;
    static std::map<int, GaussLegendreRule> cache;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(order);
    if (it == cache.end()) it = cache.emplace(order, compute_rule(order)).first;
    return it->second;
}

double gauss_integrate(const std::function<double(double)>& f, double a, double b, int order) {
    const GaussLegendreRule& rule = gauss_legendre(order);
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double s = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        s += rule.weights[i] * f(mid + half * rule.nodes[i]);
    }
    return half * s;
}

double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          const QuadratureSpec& spec) {
    double prev = gauss_integrate(f, a, b, 64);
    for (int order = 128; order <= spec.max_order; order *= 2) {
        const double cur = gauss_integrate(f, a, b, order);
        const double scale = std::max(std::abs(cur), 1e-300);
        if (std::abs(cur - prev) <= spec.rel_tol * scale) return cur;
        prev = cur;
    }
    throw QuadratureFailure("integral did not converge by order " + std::to_string(spec.max_order));
}

double rotsym_expectation(const std::function<double(double)>& f, int q, double kappa,
                          const QuadratureSpec& spec) {
    if (q < 2) throw DimensionTooSmall(q);
    if (kappa < 0.0) throw Error("kappa must be nonnegative");

    const auto ratio_at = [&](int order) {
        const GaussLegendreRule& rule = gauss_legendre(order);
        const double mid = 0.5 * kPi;
        const double half = 0.5 * kPi;
        double num = 0.0, den = 0.0;
        for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
            const double u = mid + half * rule.nodes[i];
            const double v = std::cos(u);
            double w = std::exp(kappa * (v - 1.0));
            if (q > 2) w *= std::pow(std::sin(u), static_cast<double>(q - 2));
            w *= rule.weights[i];
            num += w * f(v);
            den += w;
        }
        return num / den;
    };

    double prev = ratio_at(64);
    for (int order = 128; order <= spec.max_order; order *= 2) {
        const double cur = ratio_at(order);
        const double scale = std::max(std::abs(cur), 1.0);
        if (std::abs(cur - prev) <= spec.rel_tol * scale) return cur;
        prev = cur;
    }
    throw QuadratureFailure("rotationally symmetric expectation did not converge by order " +
                            std::to_string(spec.max_order) + " (q=" + std::to_string(q) +
                            ", kappa=" + std::to_string(kappa) + ")");
}

} // namespace dirdepth
