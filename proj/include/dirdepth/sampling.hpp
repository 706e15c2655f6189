#pragma once

#include <cstdint>
#include <utility>
#include <variant>
#include <vector>

#include "dirdepth/quadrature.hpp"
#include "dirdepth/sphere.hpp"

namespace dirdepth {

// vMF(theta0, kappa) on S^{q-1}; kappa = 0 means uniform.
struct VmfModel {
    int q;
    UnitVector mode;
    double kappa;

    VmfModel(int q_, UnitVector mode_, double kappa_);
};

struct MixtureModel {
    std::vector<VmfModel> components;
    std::vector<double> weights;

    MixtureModel(std::vector<VmfModel> components_, std::vector<double> weights_);
    static MixtureModel single(VmfModel component);
    int q() const { return components.front().q; }
};

struct ContaminatedModel {
    std::variant<VmfModel, MixtureModel> base;
    double eps;
    UnitVector atom;

    ContaminatedModel(std::variant<VmfModel, MixtureModel> base_, double eps_, UnitVector atom_);
    int q() const;
};

struct VmfSampleStats {
    long proposals = 0;
    long accepted = 0;
};

// n i.i.d. draws by tangent-normal decomposition: the cosine t to the mode is
// drawn by the beta-envelope rejection scheme, the tangent direction is a
// uniform point on S^{q-2} embedded through the Householder reflection that
// maps e_q to the mode. Identical seeds give identical output.
DirectionalSample sample_vmf(const VmfModel& model, int n, std::uint64_t seed,
                             VmfSampleStats* stats = nullptr);

// Normalized independent standard Gaussian vectors.
DirectionalSample sample_uniform(int q, int n, std::uint64_t seed);

// Component indices come from substream(seed, 0); component k draws its points
// from substream(seed, k + 1), so a single-component mixture reproduces
// sample_vmf under the derived sub-seed.
DirectionalSample sample_mixture(const MixtureModel& model, int n, std::uint64_t seed);

// Each draw is the atom with probability eps, otherwise a base draw. eps = 0
// returns the base sample under the same seed, bit for bit.
DirectionalSample sample_contaminated(const ContaminatedModel& model, int n, std::uint64_t seed);

// Labeled two-class draw from (1/2) h1 + (1/2) h2; labels are 1 or 2.
std::pair<DirectionalSample, std::vector<int>> sample_two_class(const MixtureModel& h1,
                                                                const MixtureModel& h2, int n,
                                                                std::uint64_t seed);

// Density value c * exp(kappa x.theta0), normalized numerically.
double vmf_density(const VmfModel& model, const UnitVector& x, const QuadratureSpec& qspec = {});

// A_q(kappa) = E[V] with V the cosine to the mode, by quadrature; 0 at kappa=0.
double mean_resultant_length(int q, double kappa, const QuadratureSpec& qspec = {});

// Surface area of S^{q-1}.
double sphere_surface_area(int q);

} // namespace dirdepth
