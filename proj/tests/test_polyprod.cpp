#include "toricstab/polyprod.hpp"
#include "toricstab/verify.hpp"

#include <doctest.h>

using namespace toric;

namespace {

SubsetCollection all_pairs(int n)
{
    SubsetCollection I{n, {}, true};
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            I.members.push_back(IndexSet({i, j}));
    return I;
}

SubsetCollection full_set(int n)
{
    std::vector<int> all(n);
    for (int k = 0; k < n; ++k)
        all[k] = k;
    return SubsetCollection{n, {IndexSet(all)}, true};
}

}  // namespace

TEST_CASE("support pattern bitstrings")
{
    const SupportPattern p = SupportPattern::from_bits("0110");
    CHECK(p.n == 4);
    CHECK(p.support == IndexSet({1, 2}));
    CHECK(p.bits() == "0110");
    CHECK_THROWS_AS(SupportPattern::from_bits("01x"), ValidationError);
}

TEST_CASE("polyhedral product membership over the vertex complex")
{
    const SimplicialComplex K = build_complex(all_pairs(3));
    CHECK(in_polyhedral_product(SupportPattern{3, IndexSet({0})}, K));
    CHECK_FALSE(in_polyhedral_product(SupportPattern{3, IndexSet({0, 1})}, K));
    CHECK(in_polyhedral_product(SupportPattern{3, IndexSet{}}, K));
    CHECK_THROWS_AS(in_polyhedral_product(SupportPattern{4, IndexSet({0})}, K),
                    ValidationError);
}

TEST_CASE("generalized wedge membership")
{
    const SubsetCollection J3 = all_pairs(3);
    CHECK(in_generalized_wedge(SupportPattern{3, IndexSet({0})}, J3));
    CHECK_FALSE(in_generalized_wedge(SupportPattern{3, IndexSet({0, 1})}, J3));

    // The full-set collection carves out the fat wedge: everything but
    // the fully supported pattern.
    const SubsetCollection I4 = full_set(4);
    const std::uint32_t limit = 1u << 4;
    for (std::uint32_t mask = 0; mask < limit; ++mask) {
        const SupportPattern p{4, IndexSet::from_mask(mask)};
        CHECK(in_generalized_wedge(p, I4) == (mask != limit - 1));
    }
}

TEST_CASE("shrinking the support preserves product membership")
{
    Rng rng(13);
    for (int trial = 0; trial < 100; ++trial) {
        const SubsetCollection I = random_collection(rng, 2, 6);
        const SimplicialComplex K = build_complex(I);
        const std::uint32_t limit = std::uint32_t{1} << I.n;
        for (std::uint32_t mask = 0; mask < limit; ++mask) {
            if (!in_polyhedral_product(SupportPattern{I.n, IndexSet::from_mask(mask)}, K))
                continue;
            for (std::uint32_t sub = (mask - 1) & mask; sub != 0; sub = (sub - 1) & mask)
                CHECK(in_polyhedral_product(SupportPattern{I.n, IndexSet::from_mask(sub)},
                                            K));
        }
    }
}

TEST_CASE("the two membership predicates agree")
{
    CHECK(wedge_identity_check(all_pairs(4)).holds);
    CHECK(wedge_identity_check(full_set(5)).holds);
    Rng rng(17);
    for (int trial = 0; trial < 1000; ++trial) {
        const WedgeIdentityResult result =
            wedge_identity_check(random_collection(rng, 2, 8));
        CHECK(result.holds);
        CHECK_FALSE(result.first_failing.has_value());
    }
}
