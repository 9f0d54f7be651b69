#include <doctest.h>

#include <algorithm>
#include <string>
#include <vector>

#include "leosim/errors.hpp"
#include "leosim/regional.hpp"

using namespace leosim;
using namespace leosim::regional;

namespace {

constexpr const char* kHeader = "region_id,country_code,level,area_km2,population\n";

ConstellationSupply starlink_supply() {
    ConstellationSupply s;
    s.name = "starlink";
    s.coverage_area_km2 = 102014.4;
    s.area_capacity_mbps_km2 = 11720.0 / 102014.4;
    s.asset_npv_usd = 600000.0;
    return s;
}

ConstellationSupply oneweb_supply() {
    ConstellationSupply s;
    s.name = "oneweb";
    s.coverage_area_km2 = 708433.33;
    s.area_capacity_mbps_km2 = 4.842e-3;
    s.asset_npv_usd = 3.0e6;
    return s;
}

}  // namespace

TEST_CASE("region loading") {
    const std::string text = std::string(kHeader) +
                             "USA.1_1,USA,1,1000,5000\n"
                             "\"Region, quoted\",CAN,2,200.5,0\n"
                             "KEN.2_1,KEN,2,50,125\n";
    const auto records = load_regions_text(text, "test.csv");
    REQUIRE(records.size() == 3);
    CHECK(records[0].region_id == "USA.1_1");
    CHECK(records[0].population_density == 5.0);
    CHECK(records[1].region_id == "Region, quoted");
    CHECK(records[1].population_density == 0.0);
    CHECK(records[2].population_density == 2.5);
}

TEST_CASE("invalid rows fail the load with row-numbered diagnostics") {
    const std::string text = std::string(kHeader) +
                             "A,USA,1,1000,5000\n"
                             "B,USA,1,0,5000\n"
                             "C,USA,9,10,10\n"
                             "D,USA,1,xyz,10\n";
    try {
        load_regions_text(text, "bad.csv");
        FAIL("expected DataError");
    } catch (const DataError& e) {
        const std::string what = e.what();
        CHECK(what.find("row 3") != std::string::npos);
        CHECK(what.find("area_km2 > 0") != std::string::npos);
        CHECK(what.find("row 4") != std::string::npos);
        CHECK(what.find("row 5") != std::string::npos);
    }

    LoadOptions skip;
    skip.skip_invalid = true;
    const auto records = load_regions_text(text, "bad.csv", skip);
    REQUIRE(records.size() == 1);
    CHECK(records[0].region_id == "A");
}

TEST_CASE("header mismatch and negative population are rejected") {
    CHECK_THROWS_AS(load_regions_text("id,area\n1,2\n", "x.csv"), DataError);
    CHECK_THROWS_AS(
        load_regions_text(std::string(kHeader) + "A,USA,1,10,-5\n", "x.csv"), DataError);
}

TEST_CASE("density decile bands") {
    CHECK(classify_density_decile(0.0) == 1);
    CHECK(classify_density_decile(4.99) == 1);
    CHECK(classify_density_decile(5.0) == 2);
    CHECK(classify_density_decile(30.0) == 7);
    CHECK(classify_density_decile(44.999) == 9);
    CHECK(classify_density_decile(45.0) == 10);
    CHECK(classify_density_decile(100.0) == 10);
    CHECK(classify_density_decile(1e9) == 10);
    CHECK_THROWS_AS(classify_density_decile(-0.1), InvalidInputError);

    // Every boundary is lower-inclusive; bands partition [0, inf).
    for (int k = 1; k <= 9; ++k) {
        CHECK(classify_density_decile(5.0 * k - 1e-9) == k);
        CHECK(classify_density_decile(5.0 * k) == k + 1);
    }
}

TEST_CASE("assessment applies the demand chain per region and constellation") {
    std::vector<RegionRecord> regions(3);
    regions[0] = {"low", "AAA", 1, 1000.0, 5000.0, 5.0};
    regions[1] = {"empty", "BBB", 1, 1000.0, 0.0, 0.0};
    regions[2] = {"dense", "CCC", 1, 100.0, 5000.0, 50.0};

    const std::vector<ConstellationSupply> supplies{starlink_supply(), oneweb_supply()};
    const auto assessments = assess_regions(regions, supplies);
    REQUIRE(assessments.size() == 3);
    REQUIRE(assessments[0].per_constellation.size() == 2);

    // density 5, 1% adoption, OBF 20 -> 0.0025 active users/km2.
    const auto& low_starlink = assessments[0].per_constellation[0];
    CHECK(low_starlink.capacity_per_user_mbps == doctest::Approx(45.96).epsilon(1e-3));
    CHECK(low_starlink.suitable);
    CHECK(assessments[0].decile_band == 2);

    // Zero population: uncontended, suitable by convention.
    const auto& empty_starlink = assessments[1].per_constellation[0];
    CHECK(empty_starlink.uncontended);
    CHECK(empty_starlink.suitable);
    CHECK(assessments[1].decile_band == 1);

    // density 50 on the thin oneweb supply: 0.194 Mbps, unsuitable.
    const auto& dense_oneweb = assessments[2].per_constellation[1];
    CHECK(dense_oneweb.capacity_per_user_mbps == doctest::Approx(0.194).epsilon(2e-3));
    CHECK(!dense_oneweb.suitable);
    CHECK(assessments[2].decile_band == 10);
}

TEST_CASE("assessment is row-independent under permutation") {
    std::vector<RegionRecord> regions;
    for (int i = 0; i < 20; ++i) {
        RegionRecord r;
        r.region_id = "R" + std::to_string(i);
        r.country_code = "XYZ";
        r.level = 1;
        r.area_km2 = 100.0;
        r.population = 37.0 * i;
        r.population_density = r.population / r.area_km2;
        regions.push_back(r);
    }
    const std::vector<ConstellationSupply> supplies{starlink_supply()};
    const auto forward = assess_regions(regions, supplies);

    auto shuffled = regions;
    std::reverse(shuffled.begin(), shuffled.end());
    const auto backward = assess_regions(shuffled, supplies);

    for (std::size_t i = 0; i < regions.size(); ++i) {
        const auto& a = forward[i];
        const auto& b = backward[regions.size() - 1 - i];
        CHECK(a.region_id == b.region_id);
        CHECK(a.decile_band == b.decile_band);
        CHECK(a.per_constellation[0].capacity_per_user_mbps ==
              b.per_constellation[0].capacity_per_user_mbps);
        CHECK(a.per_constellation[0].suitable == b.per_constellation[0].suitable);
    }
}

TEST_CASE("suitability is monotone non-increasing in density") {
    std::vector<RegionRecord> regions;
    for (double density : {0.0, 0.5, 2.0, 10.0, 25.0, 60.0, 200.0}) {
        RegionRecord r;
        r.region_id = "d" + std::to_string(density);
        r.country_code = "XYZ";
        r.level = 0;
        r.area_km2 = 1.0;
        r.population = density;
        r.population_density = density;
        regions.push_back(r);
    }
    const std::vector<ConstellationSupply> supplies{starlink_supply()};
    const auto assessments = assess_regions(regions, supplies);
    bool seen_unsuitable = false;
    for (const auto& a : assessments) {
        if (seen_unsuitable) CHECK(!a.per_constellation[0].suitable);
        if (!a.per_constellation[0].suitable) seen_unsuitable = true;
    }
    CHECK(seen_unsuitable);  // the dense end must fail the 10 Mbps bar
}

TEST_CASE("assessment requires at least one supply") {
    const std::vector<RegionRecord> regions(1);
    const std::vector<ConstellationSupply> none;
    CHECK_THROWS_AS(assess_regions(regions, none), ConfigError);
}
