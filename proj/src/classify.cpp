#include "dirdepth/classify.hpp"

#include <cstring>

#include "dirdepth/baselines.hpp"
#include "dirdepth/depth.hpp"
#include "dirdepth/rng.hpp"

namespace dirdepth {

namespace {

// FNV-1a over the byte representation of the coordinates; feeds the tie coin.
std::uint64_t hash_point(const UnitVector& w) {
    std::uint64_t h = 0xCBF29CE484222325ull;
    for (int i = 0; i < w.dim(); ++i) {
        const double x = w[i];
        unsigned char bytes[sizeof(double)];
        std::memcpy(bytes, &x, sizeof(double));
        for (unsigned char b : bytes) {
            h ^= b;
            h *= 0x100000001B3ull;
        }
    }
    return h;
}

} // namespace

DepthClassifier::DepthClassifier(DepthKind kind, std::optional<DeltaSpec> spec,
                                 DirectionalSample s1, DirectionalSample s2,
                                 std::uint64_t tie_seed)
    : kind_(kind),
      spec_(std::move(spec)),
      sample1_(std::move(s1)),
      sample2_(std::move(s2)),
      tie_seed_(tie_seed) {
    if (sample1_.dim() != sample2_.dim()) throw DimMismatch(sample1_.dim(), sample2_.dim());
}

DepthClassifier DepthClassifier::fit(DeltaSpec spec, DirectionalSample sample1,
                                     DirectionalSample sample2, std::uint64_t tie_seed) {
    return DepthClassifier(DepthKind::distance, std::move(spec), std::move(sample1),
                           std::move(sample2), tie_seed);
}

DepthClassifier DepthClassifier::fit_baseline(DepthKind kind, DirectionalSample sample1,
                                              DirectionalSample sample2, std::uint64_t tie_seed) {
    if (kind == DepthKind::distance) throw ConfigError("fit_baseline expects atd or asd");
    if (sample1.dim() != 2) throw NotCircle(sample1.dim());
    return DepthClassifier(kind, std::nullopt, std::move(sample1), std::move(sample2), tie_seed);
}

double DepthClassifier::depth_under(const UnitVector& w, const DirectionalSample& sample) const {
    switch (kind_) {
        case DepthKind::distance: return depth(*spec_, w, sample).value;
        case DepthKind::atd: return atd_circle(w, sample);
        case DepthKind::asd: return asd_circle(w, sample);
    }
    return 0.0;
}

int DepthClassifier::classify(const UnitVector& w) const {
    if (w.dim() != sample1_.dim()) throw DimMismatch(w.dim(), sample1_.dim());
    const double d1 = depth_under(w, sample1_);
    const double d2 = depth_under(w, sample2_);
    if (d1 > d2) return 1;
    if (d1 < d2) return 2;
    Rng coin(mix64(tie_seed_ ^ hash_point(w)));
    return coin.uniform() < 0.5 ? 1 : 2;
}

double DepthClassifier::misclassification_rate(const DirectionalSample& test,
                                               const std::vector<int>& labels) const {
    if (static_cast<std::size_t>(test.n()) != labels.size()) {
        throw LengthMismatch(static_cast<std::size_t>(test.n()), labels.size());
    }
    int wrong = 0;
    for (int i = 0; i < test.n(); ++i) {
        if (classify(test[i]) != labels[static_cast<std::size_t>(i)]) ++wrong;
    }
    return static_cast<double>(wrong) / test.n();
}

} // namespace dirdepth
