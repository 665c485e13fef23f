#include "toricstab/json_io.hpp"
#include "toricstab/polyprod.hpp"
#include "toricstab/verify.hpp"

#include <doctest.h>

using namespace toric;

TEST_CASE("collection documents")
{
    const SubsetCollection I =
        parse_collection(R"({"n":3,"I":[[0,1],[0,2],[1,2]]})");
    CHECK(I.n == 3);
    CHECK(I.strict);
    CHECK(I.members.size() == 3);

    const SubsetCollection relaxed =
        parse_collection(R"({"n":3,"I":[[0]],"strict":false})");
    CHECK_FALSE(relaxed.strict);

    CHECK_THROWS_AS(parse_collection("not json"), ValidationError);
    CHECK_THROWS_AS(parse_collection(R"({"I":[[0,1]]})"), ValidationError);
    CHECK_THROWS_AS(parse_collection(R"({"n":3,"I":[[0]]})"), ValidationError);
    CHECK_THROWS_AS(parse_collection(R"({"n":3,"I":[[0,1],[0,1]]})"), ValidationError);
    CHECK_THROWS_AS(parse_collection(R"({"n":3,"I":[[0,"x"]]})"), ValidationError);
    CHECK_THROWS_AS(parse_collection(R"({"n":3,"I":[[0,7]]})"), ValidationError);

    const std::string round = dump_collection(I);
    CHECK(parse_collection(round) == I);
}

TEST_CASE("canonical complex and fan bytes")
{
    const SubsetCollection J3 =
        parse_collection(R"({"n":3,"I":[[0,1],[0,2],[1,2]]})");
    CHECK(dump_complex(build_complex(J3)) == "{\"faces\":[[],[0],[1],[2]],\"n\":3}\n");
    CHECK(dump_fan(build_fan(build_complex(J3))) ==
          "{\"cones\":[[],[0],[1],[2]],\"n\":3}\n");

    const SubsetCollection I3 = parse_collection(R"({"n":3,"I":[[0,1,2]]})");
    CHECK(dump_complex(build_complex(I3)) ==
          "{\"faces\":[[],[0],[0,1],[0,2],[1],[1,2],[2]],\"n\":3}\n");
    CHECK(dump_fan(build_fan(build_complex(I3))) ==
          "{\"cones\":[[],[0],[1],[2],[0,1],[0,2],[1,2]],\"n\":3}\n");
    CHECK(dump_index_sets("primitive_sets", 3,
                          primitive_sets(build_fan(build_complex(I3)))) ==
          "{\"n\":3,\"primitive_sets\":[[0,1,2]]}\n");
}

TEST_CASE("tuple documents round trip bit-exactly")
{
    Rng rng(23);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = static_cast<int>(rng.uniform(1, 4));
        const int d = static_cast<int>(rng.uniform(0, 5));
        const MapTuple F = random_root_tuple(rng, n, d);
        const std::string text = dump_tuple(F);
        const MapTuple parsed = parse_tuple(text);
        CHECK(parsed == F);
        CHECK(dump_tuple(parsed) == text);

        std::vector<MonicPolynomial> polys;
        for (const RootMultiset& r : F.roots())
            polys.push_back(expand_roots(r));
        const MapTuple G = MapTuple::from_coeffs(std::move(polys));
        const std::string gtext = dump_tuple(G);
        CHECK(dump_tuple(parse_tuple(gtext)) == gtext);
    }
}

TEST_CASE("tuple document validation")
{
    CHECK_THROWS_AS(parse_tuple(R"({"d":1,"n":2,"form":"roots","components":[]})"),
                    ValidationError);
    CHECK_THROWS_AS(
        parse_tuple(
            R"({"d":2,"n":1,"form":"roots","components":[[["0/1+0/1*i",1]]]})"),
        ValidationError);  // multiplicities must sum to d
    CHECK_THROWS_AS(
        parse_tuple(
            R"({"d":2,"n":1,"form":"roots","components":[[["0/1+0/1*i",1],["0/1+0/1*i",1]]]})"),
        ValidationError);  // repeated point
    CHECK_THROWS_AS(
        parse_tuple(R"({"d":1,"n":1,"form":"coeffs","components":[["1/1+0/1*i","2/1+0/1*i"]]})"),
        ValidationError);  // wrong coefficient count
    CHECK_THROWS_AS(
        parse_tuple(R"({"d":1,"n":1,"form":"divisor","components":[[["0/1+0/1*i",1]]]})"),
        ValidationError);
    // Degree zero is legitimate: empty components.
    const MapTuple F =
        parse_tuple(R"({"d":0,"n":2,"form":"roots","components":[[],[]]})");
    CHECK(F.degree() == 0);
}

TEST_CASE("band report document")
{
    const StabilityParams p{3, 3, 2};
    const BandScanReport report =
        band_scan_report(p, ScanMode::general, ScanWindow::standard(p));
    const std::string text = dump_band_report(report);
    CHECK(text.find("\"agree\":true") != std::string::npos);
    CHECK(text.find("\"closed_form\":4") != std::string::npos);
    CHECK(text.find("\"min_contaminated_s_minus_k\":6") != std::string::npos);
    CHECK(text.find("\"state\":\"unknown\"") != std::string::npos);
    CHECK(text.find("\"state\":\"known\"") == std::string::npos);  // default trims

    const std::string full = dump_band_report(report, false, true);
    CHECK(full.find("\"state\":\"known\"") != std::string::npos);
    CHECK(full.find("\"state\":\"zero\"") != std::string::npos);
}
