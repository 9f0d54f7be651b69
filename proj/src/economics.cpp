#include "leosim/economics.hpp"

#include <cmath>

#include "leosim/errors.hpp"

namespace leosim::economics {

void CostBook::validate() const {
    const double values[] = {ground_station,
                             digital_infrastructure,
                             spectrum,
                             regulation_fees,
                             staff_annual,
                             research_development_annual,
                             marketing_acquisition_annual,
                             launch_per_satellite,
                             satellite_build,
                             maintenance_annual};
    for (double v : values)
        if (!(v >= 0.0) || !std::isfinite(v))
            throw ConfigError("cost book: monetary values must be >= 0");
    if (!(satellite_lifespan_years > 0.0))
        throw ConfigError("cost book: satellite lifespan must be positive");
}

void FinancialAssumptions::validate() const {
    if (!(discount_rate >= 0.0 && discount_rate < 1.0))
        throw ConfigError("financial assumptions: discount rate must be in [0, 1)");
    if (study_period_years < 1)
        throw ConfigError("financial assumptions: study period must be >= 1 year");
}

double capex_total(const CostBook& book, int satellite_count) {
    book.validate();
    if (satellite_count < 1)
        throw InvalidInputError("capex_total: satellite_count must be >= 1");
    return static_cast<double>(satellite_count) *
               (book.launch_per_satellite + book.satellite_build) +
           book.ground_station + book.digital_infrastructure + book.spectrum +
           book.regulation_fees;
}

double opex_annual(const CostBook& book, int satellite_count) {
    book.validate();
    if (satellite_count < 1)
        throw InvalidInputError("opex_annual: satellite_count must be >= 1");
    return book.staff_annual + book.research_development_annual +
           book.marketing_acquisition_annual + book.maintenance_annual;
}

double asset_npv(double capex, double opex_annual,
                 const FinancialAssumptions& assumptions) {
    assumptions.validate();
    if (!(capex >= 0.0) || !(opex_annual >= 0.0))
        throw InvalidInputError("asset_npv: inputs must be >= 0");
    double npv = capex;
    for (int t = 0; t <= assumptions.study_period_years; ++t)
        npv += opex_annual / std::pow(1.0 + assumptions.discount_rate, t);
    return npv;
}

std::vector<double> discounted_opex_terms(double opex_annual,
                                          const FinancialAssumptions& assumptions) {
    assumptions.validate();
    std::vector<double> terms;
    terms.reserve(assumptions.study_period_years + 1);
    for (int t = 0; t <= assumptions.study_period_years; ++t)
        terms.push_back(opex_annual / std::pow(1.0 + assumptions.discount_rate, t));
    return terms;
}

AssetCost allocate_per_satellite(const CostBook& book, int satellite_count,
                                 const FinancialAssumptions& assumptions) {
    AssetCost cost;
    cost.capex_per_satellite =
        capex_total(book, satellite_count) / static_cast<double>(satellite_count);
    cost.opex_annual_per_satellite =
        opex_annual(book, satellite_count) / static_cast<double>(satellite_count);
    cost.asset_npv =
        asset_npv(cost.capex_per_satellite, cost.opex_annual_per_satellite, assumptions);
    return cost;
}

}  // namespace leosim::economics
