#include "leosim/io.hpp"

#include <fstream>
#include <sstream>

#include "leosim/assets.hpp"
#include "leosim/csv.hpp"
#include "leosim/errors.hpp"

namespace leosim::io {
namespace {

using nlohmann::json;

double require_number(const json& j, const char* key, std::string_view origin) {
    if (!j.contains(key))
        throw ConfigError(std::string(origin) + ": missing required field '" + key + "'");
    const auto& v = j.at(key);
    if (!v.is_number())
        throw ConfigError(std::string(origin) + ": field '" + key + "' must be a number");
    return v.get<double>();
}

int require_int(const json& j, const char* key, std::string_view origin) {
    if (!j.contains(key))
        throw ConfigError(std::string(origin) + ": missing required field '" + key + "'");
    const auto& v = j.at(key);
    if (!v.is_number_integer())
        throw ConfigError(std::string(origin) + ": field '" + key + "' must be an integer");
    return v.get<int>();
}

std::string require_string(const json& j, const char* key, std::string_view origin) {
    if (!j.contains(key))
        throw ConfigError(std::string(origin) + ": missing required field '" + key + "'");
    const auto& v = j.at(key);
    if (!v.is_string())
        throw ConfigError(std::string(origin) + ": field '" + key + "' must be a string");
    return v.get<std::string>();
}

json metric_to_json(const MetricSummary& m) {
    return json{{"mean", m.mean},
                {"sample_std", m.sample_std},
                {"ci95_halfwidth", m.ci_halfwidth}};
}

std::string marker_or_number(double value, bool uncontended) {
    return uncontended ? "uncontended" : csv::format_double(value);
}

}  // namespace

ConstellationAsset load_constellation(const std::string& name_or_path) {
    std::string text;
    std::string origin;
    if (assets::is_builtin(name_or_path)) {
        text = assets::constellation_json(name_or_path);
        origin = "builtin:" + name_or_path;
    } else {
        origin = name_or_path;
        if (!std::filesystem::exists(name_or_path))
            throw ConfigError("'" + name_or_path +
                              "' is neither a builtin constellation "
                              "(starlink, kuiper, oneweb) nor an existing file");
        text = read_file(name_or_path);
    }
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError(origin + ": invalid JSON: " + e.what());
    }
    return parse_constellation_json(j, origin);
}

ConstellationAsset parse_constellation_json(const json& j, std::string_view origin) {
    if (!j.is_object() || !j.contains("design"))
        throw ConfigError(std::string(origin) + ": missing required field 'design'");
    ConstellationAsset asset;
    asset.design = design_from_json(j.at("design"), origin);
    if (j.contains("costs"))
        asset.costs = cost_book_from_json(j.at("costs"), origin);
    return asset;
}

json design_to_json(const engine::ConstellationDesign& d) {
    json j{{"name", d.name},
           {"satellite_count", d.satellite_count},
           {"altitude_km", d.altitude_km},
           {"frequency_ghz", d.frequency_ghz},
           {"channel_bandwidth_mhz", d.channel_bandwidth_mhz},
           {"channels", d.channels},
           {"reuse_factor", d.reuse_factor},
           {"eirp_dbw", d.eirp_dbw},
           {"receiver_gain_dbi", d.receiver_gain_dbi},
           {"system_temperature_k", d.system_temperature_k},
           {"min_elevation_deg", d.min_elevation_deg},
           {"antenna_diameter_m", d.antenna_diameter_m},
           {"satellite_mass_kg", d.satellite_mass_kg}};
    if (d.modulation_cap) j["modulation_cap"] = *d.modulation_cap;
    return j;
}

engine::ConstellationDesign design_from_json(const json& j, std::string_view origin) {
    engine::ConstellationDesign d;
    d.name = require_string(j, "name", origin);
    d.satellite_count = require_int(j, "satellite_count", origin);
    d.altitude_km = require_number(j, "altitude_km", origin);
    d.frequency_ghz = require_number(j, "frequency_ghz", origin);
    d.channel_bandwidth_mhz = require_number(j, "channel_bandwidth_mhz", origin);
    d.channels = require_int(j, "channels", origin);
    d.reuse_factor = require_number(j, "reuse_factor", origin);
    d.eirp_dbw = require_number(j, "eirp_dbw", origin);
    d.receiver_gain_dbi = require_number(j, "receiver_gain_dbi", origin);
    d.system_temperature_k = require_number(j, "system_temperature_k", origin);
    d.min_elevation_deg = require_number(j, "min_elevation_deg", origin);
    d.antenna_diameter_m = require_number(j, "antenna_diameter_m", origin);
    d.satellite_mass_kg = require_number(j, "satellite_mass_kg", origin);
    if (j.contains("modulation_cap"))
        d.modulation_cap = require_string(j, "modulation_cap", origin);
    d.validate();
    return d;
}

json cost_book_to_json(const economics::CostBook& b) {
    return json{{"ground_station", b.ground_station},
                {"digital_infrastructure", b.digital_infrastructure},
                {"spectrum", b.spectrum},
                {"regulation_fees", b.regulation_fees},
                {"staff_annual", b.staff_annual},
                {"research_development_annual", b.research_development_annual},
                {"marketing_acquisition_annual", b.marketing_acquisition_annual},
                {"launch_per_satellite", b.launch_per_satellite},
                {"satellite_build", b.satellite_build},
                {"maintenance_annual", b.maintenance_annual},
                {"satellite_lifespan", b.satellite_lifespan_years}};
}

economics::CostBook cost_book_from_json(const json& j, std::string_view origin) {
    economics::CostBook b;
    b.ground_station = require_number(j, "ground_station", origin);
    b.digital_infrastructure = require_number(j, "digital_infrastructure", origin);
    b.spectrum = require_number(j, "spectrum", origin);
    b.regulation_fees = require_number(j, "regulation_fees", origin);
    b.staff_annual = require_number(j, "staff_annual", origin);
    b.research_development_annual = require_number(j, "research_development_annual", origin);
    b.marketing_acquisition_annual = require_number(j, "marketing_acquisition_annual", origin);
    b.launch_per_satellite = require_number(j, "launch_per_satellite", origin);
    b.satellite_build = require_number(j, "satellite_build", origin);
    // optional, defaults to 0: the model never invents money
    b.maintenance_annual = j.contains("maintenance_annual")
                               ? require_number(j, "maintenance_annual", origin)
                               : 0.0;
    b.satellite_lifespan_years = require_number(j, "satellite_lifespan", origin);
    b.validate();
    return b;
}

json geometry_to_json(const geometry::GeometryResult& g) {
    return json{{"network_density_per_km2", g.network_density_per_km2},
                {"coverage_area_km2", g.coverage_area_km2},
                {"mean_separation_km", g.mean_separation_km},
                {"slant_path_km", g.slant_path_km}};
}

json summary_to_json(const engine::SimulationSummary& s) {
    return json{{"constellation", s.constellation},
                {"satellite_count", s.satellite_count},
                {"iterations", s.iterations},
                {"master_seed", s.master_seed},
                {"geometry", geometry_to_json(s.geometry)},
                {"metrics",
                 json{{"fspl_db", metric_to_json(s.fspl_db)},
                      {"cnr_db", metric_to_json(s.cnr_db)},
                      {"spectral_efficiency", metric_to_json(s.spectral_efficiency)},
                      {"channel_capacity_mbps", metric_to_json(s.channel_capacity_mbps)},
                      {"area_capacity_mbps_km2", metric_to_json(s.area_capacity_mbps_km2)}}}};
}

std::string draws_to_csv(const std::vector<engine::IterationRecord>& draws) {
    std::string out =
        "iteration,shadowing_db,fspl_db,eirp_dbw,g_over_t_db_k,noise_dbw,cnr_db,"
        "spectral_efficiency,channel_capacity_mbps,area_capacity_mbps_km2\n";
    for (const auto& d : draws) {
        out += csv::format_row({std::to_string(d.iteration),
                                csv::format_double(d.link.shadowing_db),
                                csv::format_double(d.link.fspl_db),
                                csv::format_double(d.link.eirp_dbw),
                                csv::format_double(d.link.g_over_t_db_k),
                                csv::format_double(d.link.noise_dbw),
                                csv::format_double(d.link.cnr_db),
                                csv::format_double(d.capacity.spectral_efficiency),
                                csv::format_double(d.capacity.channel_capacity_mbps),
                                csv::format_double(d.capacity.area_capacity_mbps_km2)});
        out += '\n';
    }
    return out;
}

std::string density_sweep_to_csv(const std::vector<double>& densities,
                                 const std::vector<demand::DemandResult>& results) {
    std::string out =
        "subscriber_density,active_user_density,capacity_per_user_mbps,"
        "cost_per_user_usd,uncontended\n";
    for (std::size_t i = 0; i < results.size(); ++i) {
        const auto& r = results[i];
        out += csv::format_row({csv::format_double(densities[i]),
                                csv::format_double(r.active_user_density),
                                marker_or_number(r.capacity_per_user_mbps, r.uncontended),
                                marker_or_number(r.cost_per_user_usd, r.uncontended),
                                r.uncontended ? "true" : "false"});
        out += '\n';
    }
    return out;
}

std::string size_sweep_to_csv(const std::vector<engine::SimulationSummary>& summaries) {
    std::string out =
        "satellite_count,coverage_area_km2,mean_fspl_db,mean_cnr_db,"
        "mean_spectral_efficiency,mean_channel_capacity_mbps,"
        "mean_area_capacity_mbps_km2,ci95_channel_capacity_mbps\n";
    for (const auto& s : summaries) {
        out += csv::format_row({std::to_string(s.satellite_count),
                                csv::format_double(s.geometry.coverage_area_km2),
                                csv::format_double(s.fspl_db.mean),
                                csv::format_double(s.cnr_db.mean),
                                csv::format_double(s.spectral_efficiency.mean),
                                csv::format_double(s.channel_capacity_mbps.mean),
                                csv::format_double(s.area_capacity_mbps_km2.mean),
                                csv::format_double(s.channel_capacity_mbps.ci_halfwidth)});
        out += '\n';
    }
    return out;
}

std::string assessments_to_csv(const std::vector<regional::RegionAssessment>& assessments) {
    std::string out =
        "region_id,density,decile_band,constellation,capacity_per_user_mbps,"
        "cost_per_user_usd,suitable\n";
    for (const auto& a : assessments) {
        for (const auto& outcome : a.per_constellation) {
            out += csv::format_row(
                {a.region_id, csv::format_double(a.population_density),
                 std::to_string(a.decile_band), outcome.constellation,
                 marker_or_number(outcome.capacity_per_user_mbps, outcome.uncontended),
                 marker_or_number(outcome.cost_per_user_usd, outcome.uncontended),
                 outcome.suitable ? "true" : "false"});
            out += '\n';
        }
    }
    return out;
}

std::uint64_t fnv1a64(std::string_view bytes) {
    std::uint64_t hash = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        hash ^= c;
        hash *= 0x100000001b3ULL;
    }
    return hash;
}

std::string config_hash(const json& config) {
    // nlohmann orders object keys, so dump() is canonical for equal configs.
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%016llx",
                  static_cast<unsigned long long>(fnv1a64(config.dump())));
    return std::string("fnv1a64:") + buf;
}

json provenance(std::uint64_t master_seed, const json& config) {
    return json{{"tool", kToolVersion},
                {"asset_version", std::string(assets::kAssetVersion)},
                {"master_seed", master_seed},
                {"config_hash", config_hash(config)},
                {"config", config}};
}

std::string csv_preamble(const json& prov) {
    std::string out;
    out += "# tool=" + prov.at("tool").get<std::string>() + "\n";
    out += "# asset_version=" + prov.at("asset_version").get<std::string>() + "\n";
    out += "# master_seed=" + std::to_string(prov.at("master_seed").get<std::uint64_t>()) + "\n";
    out += "# config_hash=" + prov.at("config_hash").get<std::string>() + "\n";
    out += "# config=" + prov.at("config").dump() + "\n";
    return out;
}

void write_atomic(const std::filesystem::path& path, std::string_view content) {
    namespace fs = std::filesystem;
    const fs::path dir = path.parent_path().empty() ? "." : path.parent_path();
    fs::create_directories(dir);
    const fs::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw DataError("cannot open '" + tmp.string() + "' for writing");
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        if (!out) throw DataError("write failed for '" + tmp.string() + "'");
    }
    fs::rename(tmp, path);
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open '" + path.string() + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

}  // namespace leosim::io
