// MODCOD threshold table and the CNR -> spectral efficiency -> capacity map.
#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace leosim::capacity {

struct ModcodEntry {
    std::string name;            // "QPSK 3/4", "16APSK 2/3", ...
    double required_cnr_db = 0.0;
    double spectral_efficiency = 0.0;  // bits/s/Hz
    int modulation_order = 0;          // 4 = QPSK, 8 = 8PSK, 16 = 16APSK, ...
};

/// Constellation order encoded in a MODCOD name: QPSK -> 4, <N>PSK -> N,
/// <N>APSK -> N. Throws ConfigError on anything else.
int modulation_order(std::string_view modcod_name);

/// Ordered MODCOD thresholds. Rows must be strictly increasing in both
/// required CNR and spectral efficiency; violations are rejected at load
/// with the offending row named.
class ModcodTable {
public:
    /// Empty table; using it for lookups is a configuration error.
    ModcodTable() = default;

    /// Parse CSV text with header `modcod,required_cnr_db,spectral_efficiency`.
    /// Lines starting with '#' are comments.
    static ModcodTable from_csv_text(std::string_view text, std::string_view origin = "<memory>");
    static ModcodTable from_csv_file(const std::filesystem::path& path);

    const std::vector<ModcodEntry>& entries() const { return entries_; }
    double min_required_cnr_db() const;

private:
    explicit ModcodTable(std::vector<ModcodEntry> entries) : entries_(std::move(entries)) {}
    std::vector<ModcodEntry> entries_;
};

struct CapacityResult {
    double spectral_efficiency = 0.0;
    double channel_capacity_mbps = 0.0;
    double area_capacity_mbps_km2 = 0.0;
};

/// Spectral efficiency of the highest entry whose required CNR is <= cnr_db,
/// restricted to entries at or below `modulation_cap` (e.g. "16APSK").
/// Returns 0 below the lowest threshold: the link is in outage, not an error.
double lookup_spectral_efficiency(double cnr_db, const ModcodTable& table,
                                  const std::optional<std::string>& modulation_cap = {});

/// se * bandwidth * channels * reuse, Mbps. se may be 0 (outage).
double channel_capacity(double spectral_efficiency, double bandwidth_mhz,
                        int channels, double reuse_factor);

/// channel capacity / coverage area, Mbps/km2.
double area_capacity(double channel_capacity_mbps, double coverage_area_km2);

}  // namespace leosim::capacity
