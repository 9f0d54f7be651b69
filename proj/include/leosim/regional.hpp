// Batch per-region assessment: tabular region ingestion, density decile
// classification, and per-constellation capacity/cost per user.
#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "leosim/demand.hpp"
#include "leosim/economics.hpp"
#include "leosim/engine.hpp"

namespace leosim::regional {

struct RegionRecord {
    std::string region_id;
    std::string country_code;
    int level = 0;  // administrative level 0/1/2
    double area_km2 = 0.0;
    double population = 0.0;
    double population_density = 0.0;  // population / area
};

struct LoadOptions {
    /// Drop invalid rows instead of failing the whole load.
    bool skip_invalid = false;
};

/// Parse a region CSV with header `region_id,country_code,level,area_km2,population`.
/// Rows failing validation are collected with their row numbers; unless
/// skip_invalid is set, any invalid row fails the load with a DataError
/// listing every diagnostic.
std::vector<RegionRecord> load_regions(const std::filesystem::path& path,
                                       const LoadOptions& options = {});
std::vector<RegionRecord> load_regions_text(std::string_view text,
                                            std::string_view origin,
                                            const LoadOptions& options = {});

/// Width-5, lower-inclusive population-density bands: band 1 is < 5,
/// band 10 is >= 45. min(floor(density / 5) + 1, 10).
int classify_density_decile(double density);

/// Supply offered by one constellation, as consumed by the assessment.
struct ConstellationSupply {
    std::string name;
    double area_capacity_mbps_km2 = 0.0;
    double coverage_area_km2 = 0.0;
    double asset_npv_usd = 0.0;
};

/// Mean-supply view of a simulation summary plus its per-asset cost.
ConstellationSupply supply_from(const engine::SimulationSummary& summary,
                                const economics::AssetCost& asset);

struct RegionalOutcome {
    std::string constellation;
    double capacity_per_user_mbps = 0.0;
    double cost_per_user_usd = 0.0;
    bool uncontended = false;
    bool suitable = false;
};

struct RegionAssessment {
    std::string region_id;
    double population_density = 0.0;
    int decile_band = 0;
    std::vector<RegionalOutcome> per_constellation;
};

struct AssessOptions {
    double adoption_rate_percent = 1.0;
    double overbooking_factor = 20.0;
    double suitability_threshold_mbps = 10.0;
    demand::CostDenominator cost_denominator = demand::CostDenominator::active_users;
};

/// Apply the demand chain per region and constellation. Row-independent:
/// permuting the input regions permutes the output identically.
std::vector<RegionAssessment> assess_regions(std::span<const RegionRecord> regions,
                                             std::span<const ConstellationSupply> supplies,
                                             const AssessOptions& options = {});

}  // namespace leosim::regional
