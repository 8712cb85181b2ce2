#include "support.hpp"

#include "lrsk/verify.hpp"

#include <doctest.h>

using namespace lrsk;
using namespace lrsk::test;

TEST_CASE("sweep domain adds the zero-free multicompositions") {
    const auto domain = sweep_domain(3, 1, 1);
    CHECK(domain == std::vector<MultiComposition>{mc({{3}}), mc({{1, 2}}), mc({{2, 1}}),
                                                  mc({{1, 1, 1}})});
    CHECK(sweep_domain(3, 2, 3) == enum_multicompositions(3, 2, 3));
}

TEST_CASE("small sweep passes every check") {
    const auto report = run_sweep(EnumerationBudget{3, 2, 3}, 1);
    CHECK(report.ok());
    CHECK(report.failures.empty());
    CHECK(report.cells > 0);
    for (const char* name : {checks::kChainCardinality, checks::kCardinalityIdentity,
                             checks::kRoundTrip, checks::kInjectivity, checks::kImageCoverage,
                             checks::kBcmImage, checks::kBiwordImage, checks::kFlagging}) {
        REQUIRE(report.checks.count(name) == 1);
        CHECK(report.checks.at(name).run > 0);
        CHECK(report.checks.at(name).failed == 0);
    }
    CHECK(report.checks.at(checks::kRoundTrip).run == report.parmat_elements);
}

TEST_CASE("threaded sweep matches the sequential one") {
    const auto one = sweep_level(2, 3, 2, 1);
    const auto many = sweep_level(2, 3, 2, 4);
    CHECK(one.cells == many.cells);
    CHECK(one.parmat_elements == many.parmat_elements);
    for (const auto& [name, tally] : one.checks) {
        CHECK(many.checks.at(name).run == tally.run);
        CHECK(many.checks.at(name).failed == tally.failed);
    }
}

TEST_CASE("report merge caps failure messages") {
    SweepReport a, b;
    b.cells = 2;
    b.checks["x"] = {3, 1};
    b.failures.assign(SweepReport::kMaxMessages + 5, "boom");
    a.merge(b);
    a.merge(b);
    CHECK(a.cells == 4);
    CHECK(a.checks["x"].run == 6);
    CHECK(a.failure_count() == 2);
    CHECK_FALSE(a.ok());
    CHECK(a.failures.size() == SweepReport::kMaxMessages);
}
