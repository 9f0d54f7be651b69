#include "leosim/demand.hpp"

#include <cmath>

#include "leosim/errors.hpp"

namespace leosim::demand {

DemandScenario DemandScenario::from_population(double population_density,
                                               double adoption_rate_percent,
                                               double overbooking_factor) {
    DemandScenario s;
    s.population_density = population_density;
    s.adoption_rate_percent = adoption_rate_percent;
    s.overbooking_factor = overbooking_factor;
    s.validate();
    return s;
}

DemandScenario DemandScenario::from_subscribers(double subscriber_density,
                                                double overbooking_factor) {
    DemandScenario s;
    s.subscriber_density = subscriber_density;
    s.overbooking_factor = overbooking_factor;
    s.validate();
    return s;
}

void DemandScenario::validate() const {
    if (population_density.has_value() == subscriber_density.has_value())
        throw InvalidInputError(
            "DemandScenario: exactly one of population_density and "
            "subscriber_density must be supplied");
    if (!(adoption_rate_percent > 0.0))
        throw InvalidInputError("DemandScenario: adoption rate must be positive");
    if (!(overbooking_factor >= 1.0))
        throw InvalidInputError("DemandScenario: overbooking factor must be >= 1");
    const double density = population_density.value_or(*subscriber_density);
    if (!(density >= 0.0) || !std::isfinite(density))
        throw InvalidInputError("DemandScenario: density must be >= 0 and finite");
}

double DemandScenario::resolved_subscriber_density() const {
    validate();
    if (subscriber_density) return *subscriber_density;
    return demand::subscriber_density(*population_density, adoption_rate_percent);
}

double subscriber_density(double population_density, double adoption_rate_percent) {
    if (population_density < 0.0)
        throw InvalidInputError("subscriber_density: population density must be >= 0");
    if (adoption_rate_percent < 0.0)
        throw InvalidInputError("subscriber_density: adoption rate must be >= 0");
    return population_density * adoption_rate_percent / 100.0;
}

double active_users(double subscriber_density, double overbooking_factor) {
    if (subscriber_density < 0.0)
        throw InvalidInputError("active_users: subscriber density must be >= 0");
    if (!(overbooking_factor >= 1.0))
        throw InvalidInputError("active_users: overbooking factor must be >= 1");
    return subscriber_density / overbooking_factor;
}

std::optional<double> capacity_per_user(double area_capacity_mbps_km2,
                                        double active_user_density) {
    if (area_capacity_mbps_km2 < 0.0)
        throw InvalidInputError("capacity_per_user: area capacity must be >= 0");
    if (active_user_density < 0.0)
        throw InvalidInputError("capacity_per_user: active density must be >= 0");
    if (active_user_density == 0.0) return std::nullopt;  // uncontended
    return area_capacity_mbps_km2 / active_user_density;
}

double cost_per_user(double asset_npv_usd, double coverage_area_km2,
                     double active_user_density) {
    if (asset_npv_usd < 0.0)
        throw InvalidInputError("cost_per_user: asset NPV must be >= 0");
    if (!(coverage_area_km2 > 0.0))
        throw InvalidInputError("cost_per_user: coverage area must be positive");
    if (!(active_user_density > 0.0))
        throw InvalidInputError("cost_per_user: active user density must be positive");
    return asset_npv_usd / (coverage_area_km2 * active_user_density);
}

DemandResult evaluate(const DemandScenario& scenario, const SupplyPoint& supply,
                      CostDenominator denominator) {
    scenario.validate();
    DemandResult result;
    result.subscriber_density = scenario.resolved_subscriber_density();
    result.active_user_density =
        active_users(result.subscriber_density, scenario.overbooking_factor);

    const auto per_user =
        capacity_per_user(supply.area_capacity_mbps_km2, result.active_user_density);
    if (!per_user) {
        result.uncontended = true;
        return result;
    }
    result.capacity_per_user_mbps = *per_user;

    const double cost_density = denominator == CostDenominator::active_users
                                    ? result.active_user_density
                                    : result.subscriber_density;
    result.cost_per_user_usd =
        cost_per_user(supply.asset_npv_usd, supply.coverage_area_km2, cost_density);
    return result;
}

}  // namespace leosim::demand
