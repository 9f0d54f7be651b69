#include <doctest.h>

#include <cmath>

#include "leosim/economics.hpp"
#include "leosim/errors.hpp"
#include "leosim/io.hpp"
#include "leosim/random.hpp"

using namespace leosim;
using namespace leosim::economics;

namespace {

CostBook starlink_book() {
    return io::load_constellation("starlink").costs.value();
}
CostBook kuiper_book() { return io::load_constellation("kuiper").costs.value(); }
CostBook oneweb_book() { return io::load_constellation("oneweb").costs.value(); }

// Brute-force oracle: accumulate the discount factor by repeated division
// rather than pow(), so it shares no arithmetic path with asset_npv().
double npv_oracle(double capex, double opex, double rate, int years) {
    double npv = capex;
    double factor = 1.0;
    for (int t = 0; t <= years; ++t) {
        npv += opex * factor;
        factor /= 1.0 + rate;
    }
    return npv;
}

}  // namespace

TEST_CASE("fleet capex") {
    CHECK(capex_total(starlink_book(), 5000) == doctest::Approx(3963.1).epsilon(1e-12));
    CHECK(capex_total(oneweb_book(), 720) == doctest::Approx(1795.2).epsilon(1e-12));
    CHECK(capex_total(CostBook{}, 1) == 0.0);
    CHECK_THROWS_AS(capex_total(starlink_book(), 0), InvalidInputError);
}

TEST_CASE("fleet annual opex") {
    CHECK(opex_annual(starlink_book(), 5000) == doctest::Approx(117.5).epsilon(1e-12));
    CHECK(opex_annual(oneweb_book(), 720) == doctest::Approx(65.0).epsilon(1e-12));
    CHECK(opex_annual(CostBook{}, 1) == 0.0);
}

TEST_CASE("asset NPV worked example") {
    const FinancialAssumptions five_percent{0.05, 5, 2020};
    CHECK(asset_npv(100.0, 10.0, five_percent) == doctest::Approx(153.2948).epsilon(1e-6));
    CHECK(asset_npv(100.0, 10.0, FinancialAssumptions{0.0, 5, 2020}) ==
          doctest::Approx(160.0).epsilon(1e-12));
    CHECK_THROWS_AS(asset_npv(-1.0, 10.0, five_percent), InvalidInputError);
    CHECK_THROWS_AS(asset_npv(100.0, -1.0, five_percent), InvalidInputError);
}

TEST_CASE("NPV equals the brute-force discounted sum on random inputs") {
    RandomStream stream(31);
    const FinancialAssumptions defaults;
    for (int i = 0; i < 1000; ++i) {
        const double capex = stream.uniform() * 1000.0;
        const double opex = stream.uniform() * 200.0;
        const double rate = stream.uniform() * 0.3;
        const int years = 1 + static_cast<int>(stream.uniform() * 30.0);
        const double via_impl = asset_npv(capex, opex, {rate, years, defaults.start_year});
        const double via_oracle = npv_oracle(capex, opex, rate, years);
        CHECK(std::abs(via_impl - via_oracle) <= 1e-12 * std::max(via_impl, 1.0));
    }
}

TEST_CASE("NPV monotonicity") {
    const FinancialAssumptions base{0.05, 5, 2020};
    RandomStream stream(37);
    for (int i = 0; i < 200; ++i) {
        const double capex = stream.uniform() * 1000.0;
        const double opex = 1.0 + stream.uniform() * 200.0;
        const double npv = asset_npv(capex, opex, base);
        CHECK(asset_npv(capex + 1.0, opex, base) > npv);
        CHECK(asset_npv(capex, opex + 1.0, base) > npv);
        CHECK(asset_npv(capex, opex, {0.05, 6, 2020}) > npv);
        CHECK(asset_npv(capex, opex, {0.10, 5, 2020}) < npv);
    }
}

TEST_CASE("per-satellite allocation") {
    const FinancialAssumptions defaults;
    const auto starlink = allocate_per_satellite(starlink_book(), 5000, defaults);
    CHECK(starlink.capex_per_satellite == doctest::Approx(0.79262).epsilon(1e-9));
    CHECK(starlink.opex_annual_per_satellite == doctest::Approx(0.0235).epsilon(1e-9));
    CHECK(starlink.asset_npv == doctest::Approx(0.918).epsilon(1e-3));

    const auto kuiper = allocate_per_satellite(kuiper_book(), 3236, defaults);
    CHECK(kuiper.asset_npv == doctest::Approx(1.99).epsilon(5e-3));

    CostBook build_only;
    build_only.satellite_build = 1.0;
    for (int n : {1, 10, 5000})
        CHECK(allocate_per_satellite(build_only, n, defaults).capex_per_satellite == 1.0);
}

TEST_CASE("per-asset NPV ordering across the shipped books") {
    const FinancialAssumptions defaults;
    const double starlink = allocate_per_satellite(starlink_book(), 5000, defaults).asset_npv;
    const double kuiper = allocate_per_satellite(kuiper_book(), 3236, defaults).asset_npv;
    const double oneweb = allocate_per_satellite(oneweb_book(), 720, defaults).asset_npv;
    CHECK(starlink < kuiper);
    CHECK(kuiper < oneweb);
}

TEST_CASE("capex and opex are linear in the book fields") {
    auto book = starlink_book();
    const double base_capex = capex_total(book, 1000);
    book.spectrum += 10.0;
    CHECK(capex_total(book, 1000) == doctest::Approx(base_capex + 10.0).epsilon(1e-12));
    book.launch_per_satellite += 0.1;
    CHECK(capex_total(book, 1000) ==
          doctest::Approx(base_capex + 10.0 + 0.1 * 1000).epsilon(1e-12));

    const double base_opex = opex_annual(book, 1000);
    book.maintenance_annual += 5.0;
    CHECK(opex_annual(book, 1000) == doctest::Approx(base_opex + 5.0).epsilon(1e-12));
}

TEST_CASE("NPV never drops below capex for non-negative opex") {
    RandomStream stream(41);
    for (int i = 0; i < 200; ++i) {
        const double capex = stream.uniform() * 100.0;
        const double opex = stream.uniform() * 10.0;
        const double rate = stream.uniform() * 0.5;
        CHECK(asset_npv(capex, opex, {rate, 5, 2020}) >= capex);
    }
}

TEST_CASE("discounted opex terms itemize the NPV sum") {
    const FinancialAssumptions defaults;
    const auto terms = discounted_opex_terms(10.0, defaults);
    REQUIRE(terms.size() == 6);  // Y+1 terms, t = 0..Y
    CHECK(terms[0] == 10.0);
    double total = 100.0;
    for (double t : terms) total += t;
    CHECK(total == doctest::Approx(asset_npv(100.0, 10.0, defaults)).epsilon(1e-12));
}

TEST_CASE("validation of books and assumptions") {
    CostBook negative;
    negative.spectrum = -1.0;
    CHECK_THROWS_AS(negative.validate(), ConfigError);

    CostBook no_lifespan;
    no_lifespan.satellite_lifespan_years = 0.0;
    CHECK_THROWS_AS(no_lifespan.validate(), ConfigError);

    CHECK_THROWS_AS(FinancialAssumptions({1.5, 5, 2020}).validate(), ConfigError);
    CHECK_THROWS_AS(FinancialAssumptions({-0.1, 5, 2020}).validate(), ConfigError);
    CHECK_THROWS_AS(FinancialAssumptions({0.05, 0, 2020}).validate(), ConfigError);
}
