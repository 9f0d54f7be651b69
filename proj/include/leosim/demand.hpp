// Demand side: adoption scenarios, busy-hour contention, and the per-user
// capacity and cost that a given supply can sustain.
#pragma once

#include <optional>

namespace leosim::demand {

/// Which density divides the asset cost in the per-user cost figure.
/// `active_users` is the primary convention; `subscribers` is the alternate
/// reading where the cost is spread over everyone who signed up rather than
/// the busy-hour active share.
enum class CostDenominator { active_users, subscribers };

struct DemandScenario {
    double adoption_rate_percent = 1.0;   // canonical scenarios: 0.5, 1, 2
    double overbooking_factor = 20.0;     // 1 in OBF users active at peak
    std::optional<double> population_density;  // people/km2 -- exactly one
    std::optional<double> subscriber_density;  // users/km2  -- of these two

    static DemandScenario from_population(double population_density,
                                          double adoption_rate_percent,
                                          double overbooking_factor = 20.0);
    static DemandScenario from_subscribers(double subscriber_density,
                                           double overbooking_factor = 20.0);

    void validate() const;
    /// Subscriber density, deriving it from population when needed.
    double resolved_subscriber_density() const;
};

struct DemandResult {
    double subscriber_density = 0.0;    // users/km2
    double active_user_density = 0.0;   // users/km2
    double capacity_per_user_mbps = 0.0;
    double cost_per_user_usd = 0.0;
    /// No active users: capacity is capped by the channel, not shared.
    /// The numeric fields above are 0 and serializers emit a marker.
    bool uncontended = false;
};

/// population density * adoption rate / 100.
double subscriber_density(double population_density, double adoption_rate_percent);

/// subscriber density / overbooking factor.
double active_users(double subscriber_density, double overbooking_factor);

/// area capacity / active user density. nullopt when the active density is
/// zero: the uncontended outcome, reported as a marker rather than infinity.
std::optional<double> capacity_per_user(double area_capacity_mbps_km2,
                                        double active_user_density);

/// asset NPV / (coverage area * active user density). NPV in plain US$.
double cost_per_user(double asset_npv_usd, double coverage_area_km2,
                     double active_user_density);

/// The supply a constellation offers within one coverage area.
struct SupplyPoint {
    double area_capacity_mbps_km2 = 0.0;
    double coverage_area_km2 = 0.0;
    double asset_npv_usd = 0.0;
};

/// Full chain for one scenario against one supply point.
DemandResult evaluate(const DemandScenario& scenario, const SupplyPoint& supply,
                      CostDenominator denominator = CostDenominator::active_users);

}  // namespace leosim::demand
