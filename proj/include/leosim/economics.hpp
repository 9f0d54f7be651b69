// Capex/opex aggregation and per-satellite NPV of total cost of ownership.
// All monetary values are in millions of US dollars unless noted.
#pragma once

#include <vector>

namespace leosim::economics {

struct CostBook {
    double ground_station = 0.0;
    double digital_infrastructure = 0.0;
    double spectrum = 0.0;
    double regulation_fees = 0.0;
    double staff_annual = 0.0;
    double research_development_annual = 0.0;
    double marketing_acquisition_annual = 0.0;
    double launch_per_satellite = 0.0;
    double satellite_build = 0.0;
    double maintenance_annual = 0.0;  // ground-station energy folds in here
    double satellite_lifespan_years = 10.0;

    void validate() const;
};

struct FinancialAssumptions {
    double discount_rate = 0.05;
    int study_period_years = 5;
    int start_year = 2020;

    void validate() const;
};

struct AssetCost {
    double capex_per_satellite = 0.0;
    double opex_annual_per_satellite = 0.0;
    double asset_npv = 0.0;
};

/// Fleet capex: n * (launch + build) + ground stations + digital
/// infrastructure + spectrum + regulation fees.
double capex_total(const CostBook& book, int satellite_count);

/// Fleet annual opex: staff + R&D + marketing/acquisition + maintenance.
double opex_annual(const CostBook& book, int satellite_count);

/// capex + sum_{t=0..Y} opex / (1+r)^t  -- Y+1 terms, t = 0 included.
double asset_npv(double capex, double opex_annual,
                 const FinancialAssumptions& assumptions);

/// The individual discounted opex terms of the NPV sum, t = 0..Y.
std::vector<double> discounted_opex_terms(double opex_annual,
                                          const FinancialAssumptions& assumptions);

/// Even split of the fleet totals over the satellites, then NPV per asset.
AssetCost allocate_per_satellite(const CostBook& book, int satellite_count,
                                 const FinancialAssumptions& assumptions);

}  // namespace leosim::economics
