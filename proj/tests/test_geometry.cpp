#include <doctest.h>

#include <cmath>

#include "leosim/errors.hpp"
#include "leosim/geometry.hpp"

using namespace leosim;
using namespace leosim::geometry;

namespace {
const PhysicalConstants kConstants;
}

TEST_CASE("physical constants defaults") {
    CHECK(kConstants.earth_surface_area_km2 == 510072000.0);
    CHECK(kConstants.boltzmann_j_k == 1.38064852e-23);
    CHECK(kConstants.speed_of_light_m_s == 2.998e8);
    kConstants.validate();

    PhysicalConstants bad = kConstants;
    bad.earth_surface_area_km2 = 0.0;
    CHECK_THROWS_AS(bad.validate(), InvalidInputError);
}

TEST_CASE("network density") {
    CHECK(network_density(5000) == doctest::Approx(9.8025e-6).epsilon(1e-4));
    CHECK(network_density(1) == 1.0 / kConstants.earth_surface_area_km2);
    CHECK(network_density(720) == doctest::Approx(1.41156e-6).epsilon(1e-5));

    CHECK_THROWS_AS(network_density(0), InvalidInputError);
    CHECK_THROWS_AS(network_density(-3), InvalidInputError);
}

TEST_CASE("coverage area matches the three shipped deployments") {
    CHECK(coverage_area(5000) == doctest::Approx(102014.4).epsilon(1e-9));
    CHECK(coverage_area(720) == doctest::Approx(708433.333).epsilon(1e-6));
    CHECK(coverage_area(3236) == doctest::Approx(157624.227).epsilon(1e-6));
    CHECK_THROWS_AS(coverage_area(0), InvalidInputError);
}

TEST_CASE("coverage area is the reciprocal of density") {
    for (int n : {1, 7, 60, 720, 3236, 5000, 42000}) {
        const double product = network_density(n) * coverage_area(n);
        CHECK(std::abs(product - 1.0) <= 1e-9);
    }
}

TEST_CASE("mean separation") {
    CHECK(mean_separation(9.8025e-6) == doctest::Approx(159.7).epsilon(5e-4));
    CHECK(mean_separation(1.0) == 0.5);
    CHECK(mean_separation(1.9605e-6) == doctest::Approx(357.1).epsilon(5e-4));

    CHECK_THROWS_AS(mean_separation(0.0), InvalidInputError);
    CHECK_THROWS_AS(mean_separation(-1.0), InvalidInputError);
}

TEST_CASE("slant path") {
    CHECK(slant_path(550.0, 0.0) == 550.0);  // exact at zero separation
    CHECK(slant_path(550.0, 357.1) == doctest::Approx(655.7).epsilon(2e-4));
    CHECK(slant_path(1200.0, 357.1) == doctest::Approx(1252.0).epsilon(2e-4));

    CHECK_THROWS_AS(slant_path(0.0, 10.0), InvalidInputError);
    CHECK_THROWS_AS(slant_path(-550.0, 10.0), InvalidInputError);
    CHECK_THROWS_AS(slant_path(550.0, -1.0), InvalidInputError);
}

TEST_CASE("coverage decreases and density increases with satellite count") {
    int previous_count = 0;
    double previous_coverage = 0.0, previous_density = 0.0;
    for (int n : {1, 2, 10, 100, 720, 1000, 3236, 5000}) {
        if (previous_count > 0) {
            CHECK(coverage_area(n) < previous_coverage);
            CHECK(network_density(n) > previous_density);
        }
        previous_count = n;
        previous_coverage = coverage_area(n);
        previous_density = network_density(n);
    }
}

TEST_CASE("slant path dominates both legs") {
    for (double h : {100.0, 550.0, 1200.0}) {
        for (double s : {0.0, 50.0, 357.1, 2000.0}) {
            const double d = slant_path(h, s);
            CHECK(d >= h);
            CHECK(d >= s);
        }
    }
}

TEST_CASE("separation from density equals half the coverage square side") {
    for (int n : {1, 60, 720, 1000, 3236, 5000}) {
        const double via_density = mean_separation(network_density(n));
        const double via_coverage = std::sqrt(coverage_area(n)) / 2.0;
        CHECK(via_density == doctest::Approx(via_coverage).epsilon(1e-12));
    }
}

TEST_CASE("geometry is pure: repeated calls bit-identical") {
    const auto a = constellation_geometry(1000, 550.0);
    const auto b = constellation_geometry(1000, 550.0);
    CHECK(a.network_density_per_km2 == b.network_density_per_km2);
    CHECK(a.coverage_area_km2 == b.coverage_area_km2);
    CHECK(a.mean_separation_km == b.mean_separation_km);
    CHECK(a.slant_path_km == b.slant_path_km);
}

TEST_CASE("full geometry chain for the figure-scale deployment") {
    const auto geo = constellation_geometry(1000, 550.0);
    CHECK(geo.coverage_area_km2 == doctest::Approx(510072.0).epsilon(1e-9));
    CHECK(geo.mean_separation_km == doctest::Approx(357.0966).epsilon(1e-6));
    CHECK(geo.slant_path_km == doctest::Approx(655.758).epsilon(1e-5));
    CHECK(geo.slant_path_km >= 550.0);
}
