#include "toricstab/arrangements.hpp"
#include "toricstab/verify.hpp"

#include <doctest.h>

#include <algorithm>

using namespace toric;

namespace {

SubsetCollection make(int n, std::vector<std::vector<int>> members, bool strict = true)
{
    SubsetCollection I;
    I.n = n;
    I.strict = strict;
    for (auto& m : members)
        I.members.push_back(IndexSet(std::move(m)));
    return I;
}

std::vector<IndexSet> faces_of(std::vector<std::vector<int>> lists)
{
    std::vector<IndexSet> out;
    for (auto& l : lists)
        out.push_back(IndexSet(std::move(l)));
    std::sort(out.begin(), out.end());
    return out;
}

// The defining condition checked one subset at a time, independently of
// the mask arithmetic inside build_complex.
bool face_by_definition(const SubsetCollection& I, const IndexSet& candidate)
{
    for (const IndexSet& member : I.members)
        if (member.subset_of(candidate))
            return false;
    return true;
}

}  // namespace

TEST_CASE("index sets sort and reject bad input")
{
    CHECK(IndexSet({2, 0, 1}).elements() == std::vector<int>{0, 1, 2});
    CHECK_THROWS_AS(IndexSet({1, 1}), ValidationError);
    CHECK_THROWS_AS(IndexSet({-1}), ValidationError);
    CHECK(IndexSet({0, 2}).subset_of(IndexSet({0, 1, 2})));
    CHECK_FALSE(IndexSet({0, 3}).subset_of(IndexSet({0, 1, 2})));
    CHECK(IndexSet({0, 2}).proper_subset_of(IndexSet({0, 1, 2})));
    CHECK_FALSE(IndexSet({0, 2}).proper_subset_of(IndexSet({0, 2})));
}

TEST_CASE("collection validation")
{
    CHECK_NOTHROW(make(3, {{0, 1}}).validate());
    CHECK_THROWS_AS(make(1, {}).validate(), ValidationError);
    CHECK_THROWS_AS(make(3, {{0}}).validate(), ValidationError);          // strict floor
    CHECK_NOTHROW(make(3, {{0}}, false).validate());                      // relaxed floor
    CHECK_THROWS_AS(make(3, {{}}, false).validate(), ValidationError);    // empty member
    CHECK_THROWS_AS(make(3, {{0, 3}}).validate(), ValidationError);       // out of range
    CHECK_THROWS_AS(make(3, {{0, 1}, {0, 1}}).validate(), ValidationError);
}

TEST_CASE("complex of the full-set collection is all proper subsets")
{
    const SimplicialComplex K = build_complex(make(3, {{0, 1, 2}}));
    CHECK(K.faces() ==
          faces_of({{}, {0}, {1}, {2}, {0, 1}, {0, 2}, {1, 2}}));
}

TEST_CASE("complex of the all-pairs collection is the vertex set")
{
    const SimplicialComplex K = build_complex(make(3, {{0, 1}, {0, 2}, {1, 2}}));
    CHECK(K.faces() == faces_of({{}, {0}, {1}, {2}}));
}

TEST_CASE("complex of a single pair")
{
    const SimplicialComplex K = build_complex(make(3, {{0, 1}}));
    CHECK(K.faces() == faces_of({{}, {0}, {1}, {2}, {0, 2}, {1, 2}}));
}

TEST_CASE("faces match the defining condition exhaustively")
{
    Rng rng(42);
    for (int trial = 0; trial < 200; ++trial) {
        const SubsetCollection I = random_collection(rng, 2, 6);
        const SimplicialComplex K = build_complex(I);
        const std::uint32_t limit = std::uint32_t{1} << I.n;
        for (std::uint32_t mask = 0; mask < limit; ++mask) {
            const IndexSet candidate = IndexSet::from_mask(mask);
            CHECK(K.contains(candidate) == face_by_definition(I, candidate));
            CHECK(in_complex(I, candidate) == face_by_definition(I, candidate));
        }
        CHECK(is_downward_closed(K));
        // Nonempty collections never admit the full face.
        std::vector<int> full(I.n);
        for (int k = 0; k < I.n; ++k)
            full[k] = k;
        CHECK_FALSE(K.contains(IndexSet(full)));
    }
}

TEST_CASE("downward closure checker")
{
    CHECK(is_downward_closed(
        SimplicialComplex(2, faces_of({{}, {0}, {1}, {0, 1}}))));
    CHECK_FALSE(is_downward_closed(SimplicialComplex(2, faces_of({{}, {0, 1}}))));
    CHECK_THROWS_AS(validate_complex(SimplicialComplex(2, faces_of({{0}}))),
                    ValidationError);
}

TEST_CASE("r_min fixtures and errors")
{
    CHECK(r_min(make(4, {{0, 1, 2, 3}})) == 4);
    SubsetCollection J5 = make(5, {});
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j)
            J5.members.push_back(IndexSet({i, j}));
    CHECK(r_min(J5) == 2);
    CHECK(r_min(make(5, {{0, 1, 2}, {1, 2, 3, 4}})) == 3);
    CHECK_THROWS_AS(r_min(make(3, {})), ValidationError);
}

TEST_CASE("minimalize keeps only inclusion-minimal members")
{
    CHECK(minimalize(make(3, {{0, 1}, {0, 1, 2}})).members ==
          std::vector<IndexSet>{IndexSet({0, 1})});
    const SubsetCollection incomparable = make(3, {{0, 1}, {1, 2}});
    CHECK(minimalize(incomparable).members == incomparable.members);

    Rng rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const SubsetCollection I = random_collection(rng, 2, 7);
        const SubsetCollection M = minimalize(I);
        CHECK(build_complex(M) == build_complex(I));
        CHECK(r_min(M) >= r_min(I));
    }
}

TEST_CASE("enlarging the collection shrinks the complex")
{
    Rng rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        SubsetCollection I = random_collection(rng, 2, 6);
        SubsetCollection bigger = I;
        const std::uint32_t limit = std::uint32_t{1} << I.n;
        for (int extra = 0; extra < 3; ++extra) {
            const auto mask = static_cast<std::uint32_t>(rng.uniform(1, limit - 1));
            const IndexSet candidate = IndexSet::from_mask(mask);
            if (candidate.size() < 2)
                continue;
            if (std::find(bigger.members.begin(), bigger.members.end(), candidate) ==
                bigger.members.end())
                bigger.members.push_back(candidate);
        }
        const SimplicialComplex small = build_complex(bigger);
        const SimplicialComplex large = build_complex(I);
        for (const IndexSet& face : small.faces())
            CHECK(large.contains(face));
    }
}

TEST_CASE("explicit enumeration is capped, lazy queries are not")
{
    SubsetCollection I = make(24, {{0, 1}});
    CHECK_THROWS_AS(build_complex(I), ValidationError);
    CHECK(in_complex(I, IndexSet({0, 23})));
    CHECK_FALSE(in_complex(I, IndexSet({0, 1, 5})));
}
