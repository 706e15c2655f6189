#include "dirdepth/sphere.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "dirdepth/rng.hpp"

namespace dirdepth {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

double norm2(std::span<const double> xs) {
    double s = 0.0;
    for (double x : xs) s += x * x;
    return std::sqrt(s);
}

std::vector<double> normalized(std::span<const double> xs) {
    const double nrm = norm2(xs);
    if (nrm < 1e-300) throw ZeroNorm();
    std::vector<double> out(xs.begin(), xs.end());
    for (double& x : out) x /= nrm;
    return out;
}

} // namespace

UnitVector::UnitVector(std::vector<double> coords) : coords_(std::move(coords)) {
    if (coords_.size() < 2) throw DimensionTooSmall(static_cast<int>(coords_.size()));
    const double nrm = norm2(coords_);
    if (std::abs(nrm - 1.0) > 1e-8) {
        throw Error("UnitVector norm " + std::to_string(nrm) + " outside 1e-8 admission tolerance");
    }
    for (double& x : coords_) x /= nrm;
}

UnitVector UnitVector::from_components(std::span<const double> xs) {
    if (xs.size() < 2) throw DimensionTooSmall(static_cast<int>(xs.size()));
    return UnitVector(normalized(xs), RawTag{});
}

UnitVector UnitVector::from_angle(double alpha) {
    return UnitVector({std::cos(alpha), std::sin(alpha)}, RawTag{});
}

double UnitVector::angle() const {
    if (dim() != 2) throw NotCircle(dim());
    double a = std::atan2(coords_[1], coords_[0]);
    if (a < 0.0) a += kTwoPi;
    return a;
}

UnitVector UnitVector::axis(int q, int j) {
    if (q < 2) throw DimensionTooSmall(q);
    if (j < 1 || j > q) {
        throw Error("axis index " + std::to_string(j) + " outside 1.." + std::to_string(q));
    }
    std::vector<double> xs(static_cast<std::size_t>(q), 0.0);
    xs[static_cast<std::size_t>(j - 1)] = 1.0;
    return UnitVector(std::move(xs), RawTag{});
}

UnitVector UnitVector::negated() const {
    std::vector<double> xs(coords_);
    for (double& x : xs) x = -x;
    return UnitVector(std::move(xs), RawTag{});
}

double inner(const UnitVector& u, const UnitVector& v) {
    if (u.dim() != v.dim()) throw DimMismatch(u.dim(), v.dim());
    double s = 0.0;
    for (int i = 0; i < u.dim(); ++i) s += u[i] * v[i];
    return std::clamp(s, -1.0, 1.0);
}

double squared_error(const UnitVector& a, const UnitVector& b) {
    return 2.0 * (1.0 - inner(a, b));
}

double geodesic_angle(const UnitVector& a, const UnitVector& b) {
    return std::acos(inner(a, b));
}

DirectionalSample::DirectionalSample(std::vector<UnitVector> points) : points_(std::move(points)) {
    if (points_.empty()) throw EmptySample();
    const int q = points_.front().dim();
    for (const UnitVector& p : points_) {
        if (p.dim() != q) throw DimMismatch(q, p.dim());
    }
}

const char* delta_kind_name(DeltaKind kind) {
    switch (kind) {
        case DeltaKind::arc: return "arc";
        case DeltaKind::cos: return "cos";
        case DeltaKind::chord: return "chord";
        case DeltaKind::custom: return "custom";
    }
    return "?";
}

DeltaSpec DeltaSpec::arc() {
    return DeltaSpec(DeltaKind::arc, 3.14159265358979323846264338328, {});
}

DeltaSpec DeltaSpec::cosine() { return DeltaSpec(DeltaKind::cos, 2.0, {}); }

DeltaSpec DeltaSpec::chord() { return DeltaSpec(DeltaKind::chord, 2.0, {}); }

DeltaSpec DeltaSpec::by_name(const std::string& name) {
    if (name == "arc") return arc();
    if (name == "cos") return cosine();
    if (name == "chord") return chord();
    throw BadKernel("unknown distance kernel '" + name + "'");
}

DeltaSpec DeltaSpec::custom(std::function<double(double)> eval) {
    if (!eval) throw BadKernel("custom kernel needs an evaluation function");
    if (std::abs(eval(1.0)) > 1e-12) throw BadKernel("custom kernel must satisfy delta(1) = 0");
    // Monotone non-increasing on a fixed 1001-point grid; delta is opaque, so
    // a grid check is all we can do.
    double prev = eval(-1.0);
    if (prev < 0.0) throw BadKernel("custom kernel must be nonnegative");
    for (int k = 1; k <= 1000; ++k) {
        const double t = -1.0 + 2.0 * k / 1000.0;
        const double cur = eval(t);
        if (cur < 0.0) throw BadKernel("custom kernel must be nonnegative");
        if (cur > prev + 1e-12) throw BadKernel("custom kernel must be monotone non-increasing");
        prev = cur;
    }
    const double dsup = eval(-1.0);
    return DeltaSpec(DeltaKind::custom, dsup, std::move(eval));
}

double DeltaSpec::operator()(double t) const {
    t = std::clamp(t, -1.0, 1.0);
    switch (kind_) {
        case DeltaKind::arc: return std::acos(t);
        case DeltaKind::cos: return 1.0 - t;
        case DeltaKind::chord: return std::sqrt(2.0 * (1.0 - t));
        case DeltaKind::custom: return eval_(t);
    }
    return 0.0;
}

double DeltaSpec::derivative(double t) const {
    switch (kind_) {
        case DeltaKind::arc: return -1.0 / std::sqrt(1.0 - t * t);
        case DeltaKind::cos: return -1.0;
        case DeltaKind::chord: return -1.0 / std::sqrt(2.0 * (1.0 - t));
        case DeltaKind::custom: {
            const double h = 1e-6;
            const double lo = std::max(-1.0, t - h);
            const double hi = std::min(1.0, t + h);
            return (eval_(hi) - eval_(lo)) / (hi - lo);
        }
    }
    return 0.0;
}

double distance(const DeltaSpec& spec, const UnitVector& u, const UnitVector& v) {
    return spec(inner(u, v));
}

Rotation::Rotation(int q, std::vector<double> matrix) : q_(q), m_(std::move(matrix)) {
    if (q_ < 2) throw DimensionTooSmall(q_);
    if (m_.size() != static_cast<std::size_t>(q_) * static_cast<std::size_t>(q_)) {
        throw Error("rotation matrix has wrong size");
    }
    for (int i = 0; i < q_; ++i) {
        for (int j = 0; j < q_; ++j) {
            double s = 0.0;
            for (int k = 0; k < q_; ++k) s += at(k, i) * at(k, j);
            const double target = (i == j) ? 1.0 : 0.0;
            if (std::abs(s - target) > 1e-10) {
                throw Error("matrix is not orthogonal within 1e-10");
            }
        }
    }
}

UnitVector Rotation::apply(const UnitVector& v) const {
    if (v.dim() != q_) throw DimMismatch(v.dim(), q_);
    std::vector<double> out(static_cast<std::size_t>(q_), 0.0);
    for (int i = 0; i < q_; ++i) {
        double s = 0.0;
        for (int j = 0; j < q_; ++j) s += at(i, j) * v[j];
        out[static_cast<std::size_t>(i)] = s;
    }
    return UnitVector::from_components(out);
}

DirectionalSample Rotation::apply(const DirectionalSample& sample) const {
    std::vector<UnitVector> pts;
    pts.reserve(static_cast<std::size_t>(sample.n()));
    for (const UnitVector& p : sample) pts.push_back(apply(p));
    return DirectionalSample(std::move(pts));
}

Rotation random_rotation(int q, std::uint64_t seed) {
    if (q < 2) throw DimensionTooSmall(q);
    Rng rng(seed);
    const std::size_t sq = static_cast<std::size_t>(q);
    std::vector<double> a(sq * sq);
    for (double& x : a) x = rng.normal();

    // Modified Gram-Schmidt on columns. The diagonal of the implied triangular
    // factor is a column norm, hence positive, which pins the sign convention.
    for (int j = 0; j < q; ++j) {
        for (int k = 0; k < j; ++k) {
            double dot = 0.0;
            for (int i = 0; i < q; ++i) dot += a[static_cast<std::size_t>(i * q + k)] * a[static_cast<std::size_t>(i * q + j)];
            for (int i = 0; i < q; ++i) a[static_cast<std::size_t>(i * q + j)] -= dot * a[static_cast<std::size_t>(i * q + k)];
        }
        double nrm = 0.0;
        for (int i = 0; i < q; ++i) {
            const double x = a[static_cast<std::size_t>(i * q + j)];
            nrm += x * x;
        }
        nrm = std::sqrt(nrm);
        for (int i = 0; i < q; ++i) a[static_cast<std::size_t>(i * q + j)] /= nrm;
    }
    return Rotation(q, std::move(a));
}

} // namespace dirdepth
