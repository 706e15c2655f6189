#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "dirdepth/sphere.hpp"

namespace dirdepth {

enum class DepthKind { distance, atd, asd };

// Max-depth two-class classifier: a query goes to the population under which
// it is deeper; exact ties flip a coin that is deterministic per (tie_seed, w).
class DepthClassifier {
public:
    static DepthClassifier fit(DeltaSpec spec, DirectionalSample sample1,
                               DirectionalSample sample2, std::uint64_t tie_seed);

    // kind must be atd or asd; training samples must live on the circle.
    static DepthClassifier fit_baseline(DepthKind kind, DirectionalSample sample1,
                                        DirectionalSample sample2, std::uint64_t tie_seed);

    int classify(const UnitVector& w) const; // 1 or 2

    double misclassification_rate(const DirectionalSample& test,
                                  const std::vector<int>& labels) const;

    const DirectionalSample& sample1() const { return sample1_; }
    const DirectionalSample& sample2() const { return sample2_; }

private:
    DepthClassifier(DepthKind kind, std::optional<DeltaSpec> spec, DirectionalSample s1,
                    DirectionalSample s2, std::uint64_t tie_seed);

    double depth_under(const UnitVector& w, const DirectionalSample& sample) const;

    DepthKind kind_;
    std::optional<DeltaSpec> spec_;
    DirectionalSample sample1_;
    DirectionalSample sample2_;
    std::uint64_t tie_seed_;
};

} // namespace dirdepth
