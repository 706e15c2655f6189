#include "dirdepth/sampling.hpp"

#include <cmath>
#include <numeric>

#include "dirdepth/rng.hpp"

namespace dirdepth {

namespace {

constexpr double kPi = 3.14159265358979323846264338328;

// Householder reflection mapping e_q to the mode; identity when the mode is
// already e_q. Applied in place.
class ModeFrame {
public:
    ModeFrame(int q, const UnitVector& mode) : q_(q) {
        std::vector<double> u(static_cast<std::size_t>(q), 0.0);
        u[static_cast<std::size_t>(q - 1)] = 1.0;
        double nrm2 = 0.0;
        for (int i = 0; i < q; ++i) {
            u[static_cast<std::size_t>(i)] -= mode[i];
            nrm2 += u[static_cast<std::size_t>(i)] * u[static_cast<std::size_t>(i)];
        }
        if (nrm2 > 1e-24) {
            identity_ = false;
            const double nrm = std::sqrt(nrm2);
            for (double& x : u) x /= nrm;
            u_ = std::move(u);
        }
    }

    void apply(std::vector<double>& y) const {
        if (identity_) return;
        double dot = 0.0;
        for (int i = 0; i < q_; ++i) dot += u_[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(i)];
        for (int i = 0; i < q_; ++i) y[static_cast<std::size_t>(i)] -= 2.0 * dot * u_[static_cast<std::size_t>(i)];
    }

private:
    int q_;
    bool identity_ = true;
    std::vector<double> u_;
};

// Cosine to the mode under vMF(kappa) on S^{q-1}: beta-envelope rejection
// (Ulrich/Wood construction).
double sample_vmf_cosine(Rng& rng, int q, double kappa, VmfSampleStats* stats) {
    const double m = q - 1.0;
    const double b = m / (2.0 * kappa + std::sqrt(4.0 * kappa * kappa + m * m));
    const double x0 = (1.0 - b) / (1.0 + b);
    const double c = kappa * x0 + m * std::log(1.0 - x0 * x0);
    for (;;) {
        const double z = rng.beta(0.5 * m, 0.5 * m);
        const double u = rng.uniform_pos();
        const double t = (1.0 - (1.0 + b) * z) / (1.0 - (1.0 - b) * z);
        if (stats) ++stats->proposals;
        if (kappa * t + m * std::log(1.0 - x0 * t) - c >= std::log(u)) {
            if (stats) ++stats->accepted;
            return t;
        }
    }
}

std::vector<double> gaussian_direction(Rng& rng, int dim) {
    std::vector<double> v(static_cast<std::size_t>(dim));
    double nrm2;
    do {
        nrm2 = 0.0;
        for (double& x : v) {
            x = rng.normal();
            nrm2 += x * x;
        }
    } while (nrm2 < 1e-280);
    const double nrm = std::sqrt(nrm2);
    for (double& x : v) x /= nrm;
    return v;
}

DirectionalSample sample_base(const std::variant<VmfModel, MixtureModel>& base, int n,
                              std::uint64_t seed) {
    if (std::holds_alternative<VmfModel>(base)) {
        return sample_vmf(std::get<VmfModel>(base), n, seed);
    }
    return sample_mixture(std::get<MixtureModel>(base), n, seed);
}

} // namespace

VmfModel::VmfModel(int q_, UnitVector mode_, double kappa_)
    : q(q_), mode(std::move(mode_)), kappa(kappa_) {
    if (q < 2) throw DimensionTooSmall(q);
    if (mode.dim() != q) throw DimMismatch(mode.dim(), q);
    if (kappa < 0.0) throw Error("vMF concentration must be nonnegative");
}

MixtureModel::MixtureModel(std::vector<VmfModel> components_, std::vector<double> weights_)
    : components(std::move(components_)), weights(std::move(weights_)) {
    if (components.empty()) throw ConfigError("mixture needs at least one component");
    if (components.size() != weights.size())
        throw LengthMismatch(components.size(), weights.size());
    const int q0 = components.front().q;
    for (const VmfModel& c : components) {
        if (c.q != q0) throw DimMismatch(c.q, q0);
    }
    double sum = 0.0;
    for (double w : weights) {
        if (w < 0.0) throw ConfigError("mixture weights must be nonnegative");
        sum += w;
    }
    if (std::abs(sum - 1.0) > 1e-12) throw ConfigError("mixture weights must sum to 1");
}

MixtureModel MixtureModel::single(VmfModel component) {
    return MixtureModel({std::move(component)}, {1.0});
}

ContaminatedModel::ContaminatedModel(std::variant<VmfModel, MixtureModel> base_, double eps_,
                                     UnitVector atom_)
    : base(std::move(base_)), eps(eps_), atom(std::move(atom_)) {
    if (eps < 0.0 || eps > 1.0) throw ConfigError("contamination level must be in [0, 1]");
    if (atom.dim() != q()) throw DimMismatch(atom.dim(), q());
}

int ContaminatedModel::q() const {
    return std::holds_alternative<VmfModel>(base) ? std::get<VmfModel>(base).q
                                                  : std::get<MixtureModel>(base).q();
}

DirectionalSample sample_vmf(const VmfModel& model, int n, std::uint64_t seed,
                             VmfSampleStats* stats) {
    if (n < 1) throw ConfigError("sample size must be positive");
    if (model.kappa == 0.0) return sample_uniform(model.q, n, seed);

    Rng rng(seed);
    const int q = model.q;
    const ModeFrame frame(q, model.mode);
    std::vector<UnitVector> pts;
    pts.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const double t = sample_vmf_cosine(rng, q, model.kappa, stats);
        const double s = std::sqrt(std::max(0.0, 1.0 - t * t));
        const std::vector<double> xi = gaussian_direction(rng, q - 1);
        std::vector<double> y(static_cast<std::size_t>(q));
        for (int j = 0; j < q - 1; ++j) y[static_cast<std::size_t>(j)] = s * xi[static_cast<std::size_t>(j)];
        y[static_cast<std::size_t>(q - 1)] = t;
        frame.apply(y);
        pts.push_back(UnitVector::from_components(y));
    }
    return DirectionalSample(std::move(pts));
}

DirectionalSample sample_uniform(int q, int n, std::uint64_t seed) {
    if (q < 2) throw DimensionTooSmall(q);
    if (n < 1) throw ConfigError("sample size must be positive");
    Rng rng(seed);
    std::vector<UnitVector> pts;
    pts.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) pts.push_back(UnitVector::from_components(gaussian_direction(rng, q)));
    return DirectionalSample(std::move(pts));
}

DirectionalSample sample_mixture(const MixtureModel& model, int n, std::uint64_t seed) {
    if (n < 1) throw ConfigError("sample size must be positive");
    const std::size_t k = model.components.size();

    // Assign components first, then draw each component's points as one block
    // from its own substream and scatter them back into position.
    Rng coins(substream(seed, 0));
    std::vector<std::size_t> which(static_cast<std::size_t>(n));
    std::vector<int> counts(k, 0);
    for (int i = 0; i < n; ++i) {
        const double u = coins.uniform();
        double acc = 0.0;
        std::size_t c = k - 1;
        for (std::size_t j = 0; j < k; ++j) {
            acc += model.weights[j];
            if (u < acc) {
                c = j;
                break;
            }
        }
        which[static_cast<std::size_t>(i)] = c;
        ++counts[c];
    }

    std::vector<std::vector<UnitVector>> blocks(k);
    for (std::size_t j = 0; j < k; ++j) {
        if (counts[j] == 0) continue;
        blocks[j] = sample_vmf(model.components[j], counts[j], substream(seed, j + 1)).points();
    }

    std::vector<std::size_t> used(k, 0);
    std::vector<UnitVector> pts;
    pts.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const std::size_t c = which[static_cast<std::size_t>(i)];
        pts.push_back(blocks[c][used[c]++]);
    }
    return DirectionalSample(std::move(pts));
}

DirectionalSample sample_contaminated(const ContaminatedModel& model, int n, std::uint64_t seed) {
    if (n < 1) throw ConfigError("sample size must be positive");
    if (model.eps <= 0.0) return sample_base(model.base, n, seed);
    if (model.eps >= 1.0) {
        return DirectionalSample(std::vector<UnitVector>(static_cast<std::size_t>(n), model.atom));
    }
    Rng coins(substream(seed, 0));
    std::vector<bool> is_atom(static_cast<std::size_t>(n));
    int base_count = 0;
    for (int i = 0; i < n; ++i) {
        const bool atom = coins.uniform() < model.eps;
        is_atom[static_cast<std::size_t>(i)] = atom;
        if (!atom) ++base_count;
    }
    std::vector<UnitVector> base_pts;
    if (base_count > 0) base_pts = sample_base(model.base, base_count, substream(seed, 1)).points();

    std::vector<UnitVector> pts;
    pts.reserve(static_cast<std::size_t>(n));
    std::size_t next = 0;
    for (int i = 0; i < n; ++i) {
        if (is_atom[static_cast<std::size_t>(i)]) {
            pts.push_back(model.atom);
        } else {
            pts.push_back(base_pts[next++]);
        }
    }
    return DirectionalSample(std::move(pts));
}

std::pair<DirectionalSample, std::vector<int>> sample_two_class(const MixtureModel& h1,
                                                                const MixtureModel& h2, int n,
                                                                std::uint64_t seed) {
    if (h1.q() != h2.q()) throw DimMismatch(h1.q(), h2.q());
    if (n < 1) throw ConfigError("sample size must be positive");
    Rng coins(substream(seed, 0));
    std::vector<int> labels(static_cast<std::size_t>(n));
    int n1 = 0;
    for (int i = 0; i < n; ++i) {
        const int lab = coins.uniform() < 0.5 ? 1 : 2;
        labels[static_cast<std::size_t>(i)] = lab;
        if (lab == 1) ++n1;
    }
    std::vector<UnitVector> pts1, pts2;
    if (n1 > 0) pts1 = sample_mixture(h1, n1, substream(seed, 1)).points();
    if (n - n1 > 0) pts2 = sample_mixture(h2, n - n1, substream(seed, 2)).points();

    std::vector<UnitVector> pts;
    pts.reserve(static_cast<std::size_t>(n));
    std::size_t i1 = 0, i2 = 0;
    for (int i = 0; i < n; ++i) {
        pts.push_back(labels[static_cast<std::size_t>(i)] == 1 ? pts1[i1++] : pts2[i2++]);
    }
    return {DirectionalSample(std::move(pts)), std::move(labels)};
}

double sphere_surface_area(int q) {
    if (q < 1) throw DimensionTooSmall(q);
    return 2.0 * std::pow(kPi, 0.5 * q) / std::tgamma(0.5 * q);
}

double vmf_density(const VmfModel& model, const UnitVector& x, const QuadratureSpec& qspec) {
    if (x.dim() != model.q) throw DimMismatch(x.dim(), model.q);
    const int q = model.q;
    if (model.kappa == 0.0) return 1.0 / sphere_surface_area(q);
    // Normalization through the scaled cosine marginal, so large kappa cannot
    // overflow: density(x) = exp(kappa (x.theta0 - 1)) / (omega_{q-2} * J),
    // J = int (1-v^2)^{(q-3)/2} e^{kappa (v-1)} dv (v = cos u substitution).
    const double j = integrate_adaptive(
        [&](double u) {
            double w = std::exp(model.kappa * (std::cos(u) - 1.0));
            if (q > 2) w *= std::pow(std::sin(u), static_cast<double>(q - 2));
            return w;
        },
        0.0, kPi, qspec);
    const double omega = sphere_surface_area(q - 1);
    return std::exp(model.kappa * (inner(x, model.mode) - 1.0)) / (omega * j);
}

double mean_resultant_length(int q, double kappa, const QuadratureSpec& qspec) {
    if (kappa < 0.0) throw Error("kappa must be nonnegative");
    if (kappa == 0.0) return 0.0;
    return rotsym_expectation([](double v) { return v; }, q, kappa, qspec);
}

} // namespace dirdepth
