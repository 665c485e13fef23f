#include "toricstab/verify.hpp"

#include <doctest.h>

using namespace toric;

namespace {

VerifyLimits small_limits()
{
    VerifyLimits limits;
    limits.n_max = 4;
    limits.d_max = 5;
    limits.random_collections = 150;
    limits.random_tuples = 40;
    limits.random_point_sets = 40;
    return limits;
}

}  // namespace

TEST_CASE("seeded draws are reproducible")
{
    Rng a(123), b(123);
    for (int i = 0; i < 100; ++i)
        CHECK(a.uniform(-50, 50) == b.uniform(-50, 50));
    Rng c(123), e(123);
    CHECK(random_collection(c, 2, 8) == random_collection(e, 2, 8));
}

TEST_CASE("antichain enumeration")
{
    CHECK(antichain_collections(2).size() == 1);
    CHECK(antichain_collections(3).size() == 8);  // 4 singles, 3 pairs, 1 triple of pairs
    const auto n4 = antichain_collections(4);
    CHECK(n4.size() == 113);
    for (const SubsetCollection& I : n4) {
        CHECK_FALSE(I.members.empty());
        I.validate();
        for (std::size_t i = 0; i < I.members.size(); ++i)
            for (std::size_t j = 0; j < I.members.size(); ++j)
                if (i != j)
                    CHECK_FALSE(I.members[i].subset_of(I.members[j]));
    }
    CHECK_THROWS_AS(antichain_collections(1), ValidationError);
}

TEST_CASE("random map-space members really are members of the strip")
{
    Rng rng(2024);
    for (int i = 0; i < 200; ++i) {
        const SubsetCollection I = random_collection(rng, 2, 5);
        const int d = static_cast<int>(rng.uniform(1, 6));
        const MapTuple F = random_mapspace_member(rng, I, d);
        CHECK(F.degree() == d);
        CHECK(member_by_roots(F, I));
        for (const RootMultiset& r : F.roots())
            for (const auto& e : r.entries())
                CHECK(e.point.re < d);
    }
}

TEST_CASE("all suites pass at small limits")
{
    for (const SuiteResult& suite : run_all_suites(small_limits())) {
        INFO(suite.name);
        CHECK(suite.passed());
        CHECK(suite.cases > 0);
    }
}

TEST_CASE("suite reports are deterministic for a fixed seed")
{
    const VerifyLimits limits = small_limits();
    const SuiteResult a = suite_rsigma_vs_rmin(limits);
    const SuiteResult b = suite_rsigma_vs_rmin(limits);
    CHECK(a.cases == b.cases);
    CHECK(a.failures == b.failures);
}

TEST_CASE("a perturbed expectation is caught with counterexamples")
{
    VerifyLimits limits = small_limits();
    const SuiteResult sabotaged = suite_band_scan(
        limits, [](int r, int d) { return stability_dim(r, d) + 1; },
        [](int d, int n) { return stability_dim_projective(d, n); });
    CHECK_FALSE(sabotaged.passed());
    CHECK(sabotaged.failures.front().find("general") != std::string::npos);
    CHECK(sabotaged.failures.front().find("r_min=2 d=1") != std::string::npos);
}

TEST_CASE("limit validation")
{
    VerifyLimits limits;
    limits.n_max = 0;
    CHECK_THROWS_AS(limits.validate(), ValidationError);
    limits = VerifyLimits{};
    limits.d_max = 0;
    CHECK_THROWS_AS(limits.validate(), ValidationError);
    limits = VerifyLimits{};
    limits.random_tuples = -1;
    CHECK_THROWS_AS(limits.validate(), ValidationError);
}
