// Seeded Monte Carlo orchestration and sweeps.
#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "leosim/capacity.hpp"
#include "leosim/constants.hpp"
#include "leosim/demand.hpp"
#include "leosim/economics.hpp"
#include "leosim/geometry.hpp"
#include "leosim/link_budget.hpp"
#include "leosim/stats.hpp"

namespace leosim::engine {

/// Engineering parameter set of one constellation.
struct ConstellationDesign {
    std::string name;
    int satellite_count = 0;
    double altitude_km = 0.0;
    double frequency_ghz = 0.0;
    double channel_bandwidth_mhz = 0.0;
    int channels = 0;
    double reuse_factor = 0.0;
    double eirp_dbw = 0.0;
    double receiver_gain_dbi = 0.0;
    double system_temperature_k = 0.0;
    double min_elevation_deg = 0.0;   // stored, not consumed by the equations
    double antenna_diameter_m = 0.0;  // stored, not consumed by the equations
    double satellite_mass_kg = 0.0;
    std::optional<std::string> modulation_cap;  // e.g. "16APSK"

    void validate() const;
};

/// Receiver noise model filled in from a design: system temperature and
/// bandwidth from the design, the remaining knobs at their defaults.
linkbudget::ReceiverNoiseModel default_noise_for(const ConstellationDesign& design);

struct SimulationRequest {
    ConstellationDesign design;
    std::optional<int> satellite_count_override;
    int iterations = 100;
    std::uint64_t master_seed = 0;
    linkbudget::ShadowingModel shadowing;
    linkbudget::ReceiverNoiseModel noise;
    capacity::ModcodTable modcod;
    PhysicalConstants constants;
    int workers = 0;  // 0 = hardware concurrency

    void validate() const;
    int effective_satellite_count() const;
};

struct IterationRecord {
    int iteration = 0;
    linkbudget::LinkBudgetDraw link;
    capacity::CapacityResult capacity;
};

struct SimulationSummary {
    std::string constellation;
    int satellite_count = 0;
    int iterations = 0;
    std::uint64_t master_seed = 0;
    geometry::GeometryResult geometry;
    MetricSummary fspl_db;
    MetricSummary cnr_db;
    MetricSummary spectral_efficiency;
    MetricSummary channel_capacity_mbps;
    MetricSummary area_capacity_mbps_km2;
};

struct SimulationResult {
    SimulationSummary summary;
    std::vector<IterationRecord> draws;
};

/// Run the pipeline for every iteration: derive the iteration stream, draw
/// shadowing, chain FSPL -> CNR -> spectral efficiency -> capacities, then
/// summarize. Configuration errors are reported before any iteration runs.
/// Results are bit-identical for a given request regardless of worker count.
SimulationResult run_monte_carlo(const SimulationRequest& request);

/// One summary per satellite count; geometry recomputed per count, the same
/// master seed reused at every point so the points are comparable.
std::vector<SimulationSummary> sweep_constellation_size(const SimulationRequest& request,
                                                        std::span<const int> counts);

/// Eqs. of the demand chain applied to the summary's mean area capacity at
/// each subscriber density.
std::vector<demand::DemandResult> sweep_subscriber_density(
    const SimulationSummary& summary, const economics::AssetCost& asset,
    std::span<const double> densities, double overbooking_factor,
    demand::CostDenominator denominator = demand::CostDenominator::active_users);

}  // namespace leosim::engine
