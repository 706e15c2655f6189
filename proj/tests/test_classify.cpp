#include <doctest.h>

#include <vector>

#include "dirdepth/classify.hpp"
#include "dirdepth/sampling.hpp"

using namespace dirdepth;

namespace {
constexpr double kPi = 3.14159265358979323846264338328;
}

TEST_CASE("well-separated populations classify cleanly") {
    const DirectionalSample s1 = sample_vmf(VmfModel(2, UnitVector::from_angle(0.0), 40.0), 60, 1);
    const DirectionalSample s2 = sample_vmf(VmfModel(2, UnitVector::from_angle(kPi), 40.0), 60, 2);
    for (const DeltaSpec& spec : {DeltaSpec::arc(), DeltaSpec::cosine(), DeltaSpec::chord()}) {
        const DepthClassifier clf = DepthClassifier::fit(spec, s1, s2, 9);
        CHECK(clf.classify(UnitVector::from_angle(0.1)) == 1);
        CHECK(clf.classify(UnitVector::from_angle(kPi - 0.1)) == 2);
    }
    const DepthClassifier atd = DepthClassifier::fit_baseline(DepthKind::atd, s1, s2, 9);
    CHECK(atd.classify(UnitVector::from_angle(0.1)) == 1);
    const DepthClassifier asd = DepthClassifier::fit_baseline(DepthKind::asd, s1, s2, 9);
    CHECK(asd.classify(UnitVector::from_angle(kPi - 0.1)) == 2);
}

TEST_CASE("ties flip a deterministic coin") {
    // mirror-image training sets make the depth of a symmetric query equal
    const DirectionalSample s1({UnitVector::from_angle(0.5), UnitVector::from_angle(-0.5)});
    const DirectionalSample s2({UnitVector::from_angle(kPi - 0.5),
                                UnitVector::from_angle(kPi + 0.5)});
    const UnitVector query = UnitVector::from_angle(kPi / 2);
    const DepthClassifier clf = DepthClassifier::fit(DeltaSpec::arc(), s1, s2, 4);
    const int first = clf.classify(query);
    for (int k = 0; k < 10; ++k) CHECK(clf.classify(query) == first);
    // different queries may land differently, but every label is 1 or 2
    const int other = clf.classify(UnitVector::from_angle(3 * kPi / 2));
    CHECK((other == 1 || other == 2));
}

TEST_CASE("misclassification rate counts label disagreements") {
    const DirectionalSample s1 = sample_vmf(VmfModel(2, UnitVector::from_angle(0.0), 40.0), 50, 3);
    const DirectionalSample s2 = sample_vmf(VmfModel(2, UnitVector::from_angle(kPi), 40.0), 50, 4);
    const DepthClassifier clf = DepthClassifier::fit(DeltaSpec::cosine(), s1, s2, 5);
    const DirectionalSample test({UnitVector::from_angle(0.05), UnitVector::from_angle(kPi)});
    CHECK(clf.misclassification_rate(test, {1, 2}) == 0.0);
    CHECK(clf.misclassification_rate(test, {2, 1}) == 1.0);
    CHECK(clf.misclassification_rate(test, {1, 1}) == 0.5);
    CHECK_THROWS_AS(clf.misclassification_rate(test, {1}), LengthMismatch);
}

TEST_CASE("baselines require circle data") {
    const DirectionalSample s1 = sample_uniform(3, 10, 5);
    const DirectionalSample s2 = sample_uniform(3, 10, 6);
    CHECK_THROWS_AS(DepthClassifier::fit_baseline(DepthKind::atd, s1, s2, 1), NotCircle);
}

TEST_CASE("dimension mismatch between training sets is rejected") {
    const DirectionalSample s1 = sample_uniform(3, 10, 5);
    const DirectionalSample s2 = sample_uniform(4, 10, 6);
    CHECK_THROWS_AS(DepthClassifier::fit(DeltaSpec::arc(), s1, s2, 1), DimMismatch);
}
