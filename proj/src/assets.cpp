#include "leosim/assets.hpp"

#include <array>

#include "leosim/errors.hpp"

namespace leosim::assets {
namespace {

// Ideal Es/N0 thresholds and spectral efficiencies from ETSI EN 302 307-1
// V1.4.1 Table 13, QPSK 1/4 through 16APSK 9/10. Rows dominated by a
// cheaper MODCOD (a lower threshold delivering higher efficiency) are
// omitted so that both columns are strictly increasing, which the lookup
// relies on. The dropped rows are QPSK 8/9, 8PSK 5/6, 8PSK 8/9, 8PSK 9/10.
constexpr std::string_view kModcodCsv =
    "# DVB-S2 MODCOD thresholds\n"
    "# source: ETSI EN 302 307-1 V1.4.1, Table 13 (ideal Es/N0, AWGN)\n"
    "# rows dominated by a lower-threshold, higher-efficiency MODCOD are omitted\n"
    "# so required_cnr_db and spectral_efficiency are both strictly increasing\n"
    "modcod,required_cnr_db,spectral_efficiency\n"
    "QPSK 1/4,-2.35,0.490243\n"
    "QPSK 1/3,-1.24,0.656448\n"
    "QPSK 2/5,-0.30,0.789412\n"
    "QPSK 1/2,1.00,0.988858\n"
    "QPSK 3/5,2.23,1.188304\n"
    "QPSK 2/3,3.10,1.322253\n"
    "QPSK 3/4,4.03,1.487473\n"
    "QPSK 4/5,4.68,1.587196\n"
    "QPSK 5/6,5.18,1.654663\n"
    "8PSK 3/5,5.50,1.779991\n"
    "QPSK 9/10,6.42,1.788612\n"
    "8PSK 2/3,6.62,1.980636\n"
    "8PSK 3/4,7.91,2.228124\n"
    "16APSK 2/3,8.97,2.637201\n"
    "16APSK 3/4,10.21,2.966728\n"
    "16APSK 4/5,11.03,3.165623\n"
    "16APSK 5/6,11.61,3.300184\n"
    "16APSK 8/9,12.89,3.523143\n"
    "16APSK 9/10,13.13,3.567342\n";

constexpr std::string_view kStarlinkJson = R"({
  "design": {
    "name": "starlink",
    "satellite_count": 5000,
    "altitude_km": 550,
    "frequency_ghz": 13.5,
    "channel_bandwidth_mhz": 250,
    "channels": 8,
    "reuse_factor": 2,
    "eirp_dbw": 67.7,
    "receiver_gain_dbi": 37.7,
    "system_temperature_k": 290,
    "min_elevation_deg": 40,
    "antenna_diameter_m": 0.7,
    "satellite_mass_kg": 260,
    "modulation_cap": "16APSK"
  },
  "costs": {
    "ground_station": 81.2,
    "digital_infrastructure": 6.2,
    "spectrum": 125,
    "regulation_fees": 0.7,
    "staff_annual": 60,
    "research_development_annual": 7.5,
    "marketing_acquisition_annual": 50,
    "launch_per_satellite": 0.5,
    "satellite_build": 0.25,
    "maintenance_annual": 0,
    "satellite_lifespan": 10
  }
})";

constexpr std::string_view kKuiperJson = R"({
  "design": {
    "name": "kuiper",
    "satellite_count": 3236,
    "altitude_km": 1200,
    "frequency_ghz": 17.7,
    "channel_bandwidth_mhz": 250,
    "channels": 8,
    "reuse_factor": 2,
    "eirp_dbw": 73.1,
    "receiver_gain_dbi": 43.1,
    "system_temperature_k": 290,
    "min_elevation_deg": 55,
    "antenna_diameter_m": 1.0,
    "satellite_mass_kg": 260,
    "modulation_cap": "16APSK"
  },
  "costs": {
    "ground_station": 33,
    "digital_infrastructure": 3.6,
    "spectrum": 125,
    "regulation_fees": 0.7,
    "staff_annual": 60,
    "research_development_annual": 7.5,
    "marketing_acquisition_annual": 50,
    "launch_per_satellite": 1.5,
    "satellite_build": 0.25,
    "maintenance_annual": 0,
    "satellite_lifespan": 10
  }
})";

constexpr std::string_view kOnewebJson = R"({
  "design": {
    "name": "oneweb",
    "satellite_count": 720,
    "altitude_km": 610,
    "frequency_ghz": 13.5,
    "channel_bandwidth_mhz": 250,
    "channels": 8,
    "reuse_factor": 2,
    "eirp_dbw": 68.3,
    "receiver_gain_dbi": 38.3,
    "system_temperature_k": 290,
    "min_elevation_deg": 35.2,
    "antenna_diameter_m": 0.75,
    "satellite_mass_kg": 147.5,
    "modulation_cap": "16APSK"
  },
  "costs": {
    "ground_station": 47,
    "digital_infrastructure": 2.5,
    "spectrum": 125,
    "regulation_fees": 0.7,
    "staff_annual": 7.5,
    "research_development_annual": 7.5,
    "marketing_acquisition_annual": 50,
    "launch_per_satellite": 2.0,
    "satellite_build": 0.25,
    "maintenance_annual": 0,
    "satellite_lifespan": 10
  }
})";

constexpr std::array<std::string_view, 3> kNames = {"starlink", "kuiper", "oneweb"};

}  // namespace

std::span<const std::string_view> builtin_names() { return kNames; }

bool is_builtin(std::string_view name) {
    for (auto n : kNames)
        if (n == name) return true;
    return false;
}

std::string_view constellation_json(std::string_view name) {
    if (name == "starlink") return kStarlinkJson;
    if (name == "kuiper") return kKuiperJson;
    if (name == "oneweb") return kOnewebJson;
    throw ConfigError("unknown builtin constellation '" + std::string(name) +
                      "' (expected starlink, kuiper or oneweb)");
}

std::string_view modcod_csv() { return kModcodCsv; }

}  // namespace leosim::assets
