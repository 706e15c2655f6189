#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "dirdepth/errors.hpp"

namespace dirdepth {

// A point on the unit hypersphere S^{q-1}. Immutable after construction;
// coordinates are renormalized to exact unit norm.
class UnitVector {
public:
    // Requires |norm - 1| <= 1e-8; renormalizes. Throws DimensionTooSmall / ZeroNorm.
    explicit UnitVector(std::vector<double> coords);

    // Normalizes an arbitrary nonzero vector.
    static UnitVector from_components(std::span<const double> xs);

    // Circle helpers (q = 2).
    static UnitVector from_angle(double alpha);
    double angle() const; // in [0, 2*pi)

    static UnitVector axis(int q, int j); // canonical basis vector e_j, 1-based j

    int dim() const { return static_cast<int>(coords_.size()); }
    double operator[](int i) const { return coords_[static_cast<std::size_t>(i)]; }
    const std::vector<double>& coords() const { return coords_; }

    UnitVector negated() const;

    bool operator==(const UnitVector& other) const { return coords_ == other.coords_; }

private:
    struct RawTag {};
    UnitVector(std::vector<double> coords, RawTag) : coords_(std::move(coords)) {}

    std::vector<double> coords_;
};

// Dot product clamped to [-1, 1]. Throws DimMismatch.
double inner(const UnitVector& u, const UnitVector& v);

// Squared Euclidean distance 2(1 - a.b), in [0, 4].
double squared_error(const UnitVector& a, const UnitVector& b);

// Geodesic angle arccos(a.b), in [0, pi].
double geodesic_angle(const UnitVector& a, const UnitVector& b);

// An empirical distribution H_n: n points sharing one dimension.
class DirectionalSample {
public:
    explicit DirectionalSample(std::vector<UnitVector> points);

    int dim() const { return points_.front().dim(); }
    int n() const { return static_cast<int>(points_.size()); }
    const UnitVector& operator[](int i) const { return points_[static_cast<std::size_t>(i)]; }
    const std::vector<UnitVector>& points() const { return points_; }

    auto begin() const { return points_.begin(); }
    auto end() const { return points_.end(); }

private:
    std::vector<UnitVector> points_;
};

enum class DeltaKind { arc, cos, chord, custom };

const char* delta_kind_name(DeltaKind kind);

// A rotation-invariant distance kernel delta: [-1,1] -> R+, with delta(1) = 0
// and delta monotone non-increasing. d_sup = delta(-1).
class DeltaSpec {
public:
    static DeltaSpec arc();
    static DeltaSpec cosine();
    static DeltaSpec chord();
    static DeltaSpec by_name(const std::string& name); // "arc" | "cos" | "chord"

    // Validates delta(1) = 0 within 1e-12 and monotonicity on a 1001-point grid.
    static DeltaSpec custom(std::function<double(double)> eval);

    // Evaluates delta; the argument is clamped to [-1, 1] first.
    double operator()(double t) const;

    // delta'(t), analytic for the built-in kernels, central difference for
    // custom ones. The caller is responsible for staying away from singular
    // endpoints (see the deepest-point optimizer).
    double derivative(double t) const;

    DeltaKind kind() const { return kind_; }
    const char* name() const { return delta_kind_name(kind_); }
    double d_sup() const { return d_sup_; }

    // True when delta(-t) + delta(t) = delta(-1) for all t (arc and cos).
    bool anti_symmetric() const { return kind_ == DeltaKind::arc || kind_ == DeltaKind::cos; }

private:
    DeltaSpec(DeltaKind kind, double d_sup, std::function<double(double)> eval)
        : kind_(kind), d_sup_(d_sup), eval_(std::move(eval)) {}

    DeltaKind kind_;
    double d_sup_;
    std::function<double(double)> eval_; // only set for custom kernels
};

// Evaluates the rotation-invariant distance d(u, v) = delta(u.v).
double distance(const DeltaSpec& spec, const UnitVector& u, const UnitVector& v);

// A q x q orthogonal matrix, row-major.
class Rotation {
public:
    // Validates O'O = I within 1e-10 entrywise.
    explicit Rotation(int q, std::vector<double> matrix);

    int dim() const { return q_; }
    double at(int i, int j) const { return m_[static_cast<std::size_t>(i * q_ + j)]; }

    UnitVector apply(const UnitVector& v) const;
    DirectionalSample apply(const DirectionalSample& sample) const;

private:
    int q_;
    std::vector<double> m_;
};

// Haar-distributed rotation: QR of a Gaussian draw with the triangular factor's
// diagonal made positive, so the result is a deterministic function of the seed.
Rotation random_rotation(int q, std::uint64_t seed);

} // namespace dirdepth
