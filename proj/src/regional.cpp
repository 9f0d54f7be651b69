#include "leosim/regional.hpp"

#include <charconv>
#include <cmath>

#include "leosim/csv.hpp"
#include "leosim/errors.hpp"
#include "leosim/io.hpp"

namespace leosim::regional {
namespace {

bool parse_number(const std::string& s, double& out) {
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc{} && ptr == s.data() + s.size();
}

bool parse_int(const std::string& s, int& out) {
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc{} && ptr == s.data() + s.size();
}

}  // namespace

std::vector<RegionRecord> load_regions_text(std::string_view text,
                                            std::string_view origin,
                                            const LoadOptions& options) {
    static const std::vector<std::string> kHeader = {"region_id", "country_code",
                                                     "level", "area_km2", "population"};
    const auto rows = csv::parse(text);
    if (rows.empty() || rows.front() != kHeader)
        throw DataError(std::string(origin) +
                        ": expected header region_id,country_code,level,area_km2,population");

    std::vector<RegionRecord> records;
    std::vector<std::string> diagnostics;
    records.reserve(rows.size() - 1);

    for (std::size_t r = 1; r < rows.size(); ++r) {
        const auto& row = rows[r];
        const std::string where = std::string(origin) + ": row " + std::to_string(r + 1);
        auto reject = [&](const std::string& why) { diagnostics.push_back(where + ": " + why); };

        if (row.size() != kHeader.size()) {
            reject("expected " + std::to_string(kHeader.size()) + " fields, got " +
                   std::to_string(row.size()));
            continue;
        }
        RegionRecord rec;
        rec.region_id = row[0];
        rec.country_code = row[1];
        double area = 0.0, population = 0.0;
        if (rec.region_id.empty()) {
            reject("region_id must be non-empty");
        } else if (!parse_int(row[2], rec.level)) {
            reject("non-numeric level '" + row[2] + "'");
        } else if (rec.level < 0 || rec.level > 2) {
            reject("level must be 0, 1 or 2");
        } else if (!parse_number(row[3], area)) {
            reject("non-numeric area_km2 '" + row[3] + "'");
        } else if (!(area > 0.0)) {
            reject("violates area_km2 > 0");
        } else if (!parse_number(row[4], population)) {
            reject("non-numeric population '" + row[4] + "'");
        } else if (population < 0.0) {
            reject("violates population >= 0");
        } else {
            rec.area_km2 = area;
            rec.population = population;
            rec.population_density = population / area;
            records.push_back(std::move(rec));
        }
    }

    if (!diagnostics.empty() && !options.skip_invalid) {
        std::string message = std::to_string(diagnostics.size()) + " invalid region row(s):";
        for (const auto& d : diagnostics) message += "\n  " + d;
        throw DataError(message);
    }
    return records;
}

std::vector<RegionRecord> load_regions(const std::filesystem::path& path,
                                       const LoadOptions& options) {
    return load_regions_text(io::read_file(path), path.string(), options);
}

int classify_density_decile(double density) {
    if (!(density >= 0.0) || !std::isfinite(density))
        throw InvalidInputError("classify_density_decile: density must be >= 0 and finite");
    const int band = static_cast<int>(std::floor(density / 5.0)) + 1;
    return band > 10 ? 10 : band;
}

ConstellationSupply supply_from(const engine::SimulationSummary& summary,
                                const economics::AssetCost& asset) {
    ConstellationSupply supply;
    supply.name = summary.constellation;
    supply.area_capacity_mbps_km2 = summary.area_capacity_mbps_km2.mean;
    supply.coverage_area_km2 = summary.geometry.coverage_area_km2;
    supply.asset_npv_usd = asset.asset_npv * 1e6;
    return supply;
}

std::vector<RegionAssessment> assess_regions(std::span<const RegionRecord> regions,
                                             std::span<const ConstellationSupply> supplies,
                                             const AssessOptions& options) {
    if (supplies.empty())
        throw ConfigError("assess_regions: need at least one constellation supply");

    std::vector<RegionAssessment> assessments;
    assessments.reserve(regions.size());
    for (const auto& region : regions) {
        RegionAssessment assessment;
        assessment.region_id = region.region_id;
        assessment.population_density = region.population_density;
        assessment.decile_band = classify_density_decile(region.population_density);

        const auto scenario = demand::DemandScenario::from_population(
            region.population_density, options.adoption_rate_percent,
            options.overbooking_factor);
        for (const auto& supply : supplies) {
            const demand::SupplyPoint point{supply.area_capacity_mbps_km2,
                                            supply.coverage_area_km2,
                                            supply.asset_npv_usd};
            const auto outcome = demand::evaluate(scenario, point, options.cost_denominator);
            RegionalOutcome row;
            row.constellation = supply.name;
            row.capacity_per_user_mbps = outcome.capacity_per_user_mbps;
            row.cost_per_user_usd = outcome.cost_per_user_usd;
            row.uncontended = outcome.uncontended;
            row.suitable = outcome.uncontended ||
                           outcome.capacity_per_user_mbps >= options.suitability_threshold_mbps;
            assessment.per_constellation.push_back(std::move(row));
        }
        assessments.push_back(std::move(assessment));
    }
    return assessments;
}

}  // namespace leosim::regional
