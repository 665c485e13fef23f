#include "toricstab/fans.hpp"
#include "toricstab/verify.hpp"

#include <doctest.h>

#include <algorithm>

using namespace toric;

namespace {

SubsetCollection full_set_collection(int n)
{
    std::vector<int> all(n);
    for (int k = 0; k < n; ++k)
        all[k] = k;
    return SubsetCollection{n, {IndexSet(all)}, true};
}

SubsetCollection all_pairs_collection(int n)
{
    SubsetCollection I{n, {}, true};
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            I.members.push_back(IndexSet({i, j}));
    return I;
}

Fan fan_of(const SubsetCollection& I)
{
    return build_fan(build_complex(I));
}

std::vector<IndexSet> sorted_by_card(std::vector<IndexSet> sets)
{
    std::sort(sets.begin(), sets.end(), [](const IndexSet& a, const IndexSet& b) {
        if (a.size() != b.size())
            return a.size() < b.size();
        return a < b;
    });
    return sets;
}

}  // namespace

TEST_CASE("fan over the boundary complex is the complete projective fan")
{
    const Fan F = fan_of(full_set_collection(3));
    CHECK(F.cones().size() == 7);
    for (const Cone& c : F.cones())
        CHECK(c.generators.size() <= 2);
}

TEST_CASE("fan over the vertex complex has only rays")
{
    const Fan F = fan_of(all_pairs_collection(3));
    CHECK(F.cones().size() == 4);
    CHECK(rays(F).size() == 3);
}

TEST_CASE("fan of a single-pair collection")
{
    const Fan F = fan_of(SubsetCollection{3, {IndexSet({0, 1})}, true});
    const SimplicialComplex K = build_complex(SubsetCollection{3, {IndexSet({0, 1})}, true});
    CHECK(F.cones().size() == K.faces().size());
    for (const IndexSet& face : K.faces())
        CHECK(F.contains(face));
}

TEST_CASE("no fan exists over a complex containing the full set")
{
    const SubsetCollection empty{3, {}, true};
    CHECK_THROWS_AS(build_fan(build_complex(empty)), ValidationError);
}

TEST_CASE("every strict collection yields exactly n rays")
{
    CHECK(rays(fan_of(SubsetCollection{4, {IndexSet({0, 1, 2})}, true})).size() == 4);
    Rng rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        const SubsetCollection I = random_collection(rng, 2, 6);
        CHECK(rays(fan_of(I)).size() == static_cast<std::size_t>(I.n));
    }
}

TEST_CASE("primitive set fixtures")
{
    CHECK(primitive_sets(fan_of(full_set_collection(3))) ==
          std::vector<IndexSet>{IndexSet({0, 1, 2})});
    CHECK(primitive_sets(fan_of(all_pairs_collection(3))) ==
          std::vector<IndexSet>{IndexSet({0, 1}), IndexSet({0, 2}), IndexSet({1, 2})});
    CHECK(primitive_sets(fan_of(SubsetCollection{3, {IndexSet({0, 1})}, true})) ==
          std::vector<IndexSet>{IndexSet({0, 1})});
}

TEST_CASE("primitive sets are the inclusion-minimal members")
{
    Rng rng(5);
    for (int trial = 0; trial < 300; ++trial) {
        const SubsetCollection I = random_collection(rng, 2, 7);
        CHECK(primitive_sets(fan_of(I)) == sorted_by_card(minimalize(I).members));
    }
}

TEST_CASE("r_sigma fixtures and the minimum-member identity")
{
    for (int n = 3; n <= 5; ++n) {
        CHECK(r_sigma(fan_of(full_set_collection(n))) == n);
        CHECK(r_sigma(fan_of(all_pairs_collection(n))) == 2);
    }
    Rng rng(9);
    for (int trial = 0; trial < 300; ++trial) {
        const SubsetCollection I = random_collection(rng, 2, 6);
        CHECK(r_sigma(fan_of(I)) == r_min(I));
    }
}

TEST_CASE("orbit limit fixtures")
{
    const long long zero[] = {0, 0};
    const long long pos[] = {2, 3};
    const long long mixed[] = {-1, 1};
    CHECK(orbit_limit(zero, 3) == IndexSet{});
    CHECK(orbit_limit(pos, 3) == IndexSet({1, 2}));
    CHECK(orbit_limit(mixed, 3) == IndexSet({0, 2}));
    CHECK_THROWS_AS(orbit_limit(zero, 4), ValidationError);
}

TEST_CASE("cone membership fixtures")
{
    const long long e1[] = {1, 0};
    CHECK(cone_contains(e1, Cone{IndexSet({1})}, 3) == Containment::interior);

    const long long zero[] = {0, 0};
    CHECK(cone_contains(zero, Cone{IndexSet{}}, 3) == Containment::interior);
    for (std::uint32_t mask = 1; mask < 7; ++mask)
        CHECK(cone_contains(zero, Cone{IndexSet::from_mask(mask)}, 3) ==
              Containment::boundary);

    const long long diag[] = {-1, -1};
    CHECK(cone_contains(diag, Cone{IndexSet({0})}, 3) == Containment::interior);
    CHECK(cone_contains(diag, Cone{IndexSet({1})}, 3) == Containment::outside);
    CHECK(cone_contains(diag, Cone{IndexSet({0, 1})}, 3) == Containment::boundary);
}

TEST_CASE("integer points fall in exactly one relative interior")
{
    for (int n = 2; n <= 5; ++n) {
        const int box = n <= 4 ? 2 : 1;
        std::vector<long long> u(static_cast<std::size_t>(n - 1), -box);
        while (true) {
            int interior = 0;
            IndexSet found;
            const std::uint32_t full = (std::uint32_t{1} << n) - 1;
            for (std::uint32_t mask = 0; mask < full; ++mask) {
                if (cone_contains(u, Cone{IndexSet::from_mask(mask)}, n) ==
                    Containment::interior) {
                    ++interior;
                    found = IndexSet::from_mask(mask);
                }
            }
            CHECK(interior == 1);
            CHECK(found == orbit_limit(u, n));
            std::size_t pos = 0;
            while (pos < u.size() && u[pos] == box)
                u[pos++] = -box;
            if (pos == u.size())
                break;
            ++u[pos];
        }
    }
}

TEST_CASE("relaxed collections admit singleton members and unit primitive sets")
{
    const SubsetCollection I{3, {IndexSet({0})}, false};
    const SimplicialComplex K = build_complex(I);
    CHECK_FALSE(K.contains(IndexSet({0})));
    const Fan F = build_fan(K);
    CHECK(rays(F).size() == 2);  // the missing vertex has no ray
    CHECK(primitive_sets(F) == std::vector<IndexSet>{IndexSet({0})});
    CHECK(r_sigma(F) == 1);
    CHECK(r_sigma(F) == r_min(I));  // the identity needs no cardinality floor
}

TEST_CASE("fan construction validates its input")
{
    CHECK_THROWS_AS(Fan(3, {}), ValidationError);  // missing zero cone
    CHECK_THROWS_AS(Fan(3, {Cone{IndexSet{}}, Cone{IndexSet({0, 1})}}), ValidationError);
    CHECK_THROWS_AS(Fan(2, {Cone{IndexSet{}}, Cone{IndexSet({0, 1})}}), ValidationError);
}
