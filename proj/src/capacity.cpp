#include "leosim/capacity.hpp"

#include <cctype>
#include <charconv>
#include <cmath>

#include "leosim/csv.hpp"
#include "leosim/errors.hpp"
#include "leosim/io.hpp"

namespace leosim::capacity {
namespace {

double parse_double_field(const std::string& s, std::string_view what,
                          std::string_view origin, std::size_t row) {
    double value = 0.0;
    const char* begin = s.data();
    const char* end = begin + s.size();
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end)
        throw ConfigError(std::string(origin) + ": row " + std::to_string(row) +
                          ": non-numeric " + std::string(what) + " '" + s + "'");
    return value;
}

}  // namespace

int modulation_order(std::string_view modcod_name) {
    const auto space = modcod_name.find_first_of(" \t");
    const std::string_view family =
        space == std::string_view::npos ? modcod_name : modcod_name.substr(0, space);
    if (family == "QPSK") return 4;
    std::size_t digits = 0;
    while (digits < family.size() &&
           std::isdigit(static_cast<unsigned char>(family[digits])))
        ++digits;
    const std::string_view suffix = family.substr(digits);
    if (digits > 0 && (suffix == "PSK" || suffix == "APSK")) {
        int order = 0;
        std::from_chars(family.data(), family.data() + digits, order);
        if (order >= 2) return order;
    }
    throw ConfigError("modcod name '" + std::string(modcod_name) +
                      "' has no recognizable modulation family "
                      "(expected QPSK, <N>PSK or <N>APSK)");
}

ModcodTable ModcodTable::from_csv_text(std::string_view text, std::string_view origin) {
    const auto rows = csv::parse(text);
    if (rows.empty())
        throw ConfigError(std::string(origin) + ": empty MODCOD table");
    const auto& header = rows.front();
    if (header != std::vector<std::string>{"modcod", "required_cnr_db",
                                           "spectral_efficiency"})
        throw ConfigError(std::string(origin) +
                          ": expected header modcod,required_cnr_db,spectral_efficiency");
    if (rows.size() < 2)
        throw ConfigError(std::string(origin) + ": MODCOD table has no entries");

    std::vector<ModcodEntry> entries;
    entries.reserve(rows.size() - 1);
    for (std::size_t r = 1; r < rows.size(); ++r) {
        const auto& row = rows[r];
        if (row.size() != 3)
            throw ConfigError(std::string(origin) + ": row " + std::to_string(r + 1) +
                              ": expected 3 fields, got " + std::to_string(row.size()));
        ModcodEntry entry;
        entry.name = row[0];
        entry.required_cnr_db = parse_double_field(row[1], "required_cnr_db", origin, r + 1);
        entry.spectral_efficiency =
            parse_double_field(row[2], "spectral_efficiency", origin, r + 1);
        entry.modulation_order = modulation_order(entry.name);
        if (!(entry.spectral_efficiency > 0.0))
            throw ConfigError(std::string(origin) + ": row " + std::to_string(r + 1) +
                              ": spectral efficiency must be positive");
        if (!entries.empty()) {
            const auto& prev = entries.back();
            if (!(entry.required_cnr_db > prev.required_cnr_db))
                throw ConfigError(std::string(origin) + ": row " + std::to_string(r + 1) +
                                  ": required CNR not strictly increasing ('" +
                                  entry.name + "' after '" + prev.name + "')");
            if (!(entry.spectral_efficiency > prev.spectral_efficiency))
                throw ConfigError(std::string(origin) + ": row " + std::to_string(r + 1) +
                                  ": spectral efficiency not strictly increasing ('" +
                                  entry.name + "' after '" + prev.name + "')");
        }
        entries.push_back(std::move(entry));
    }
    return ModcodTable(std::move(entries));
}

ModcodTable ModcodTable::from_csv_file(const std::filesystem::path& path) {
    return from_csv_text(io::read_file(path), path.string());
}

double ModcodTable::min_required_cnr_db() const {
    if (entries_.empty()) throw ConfigError("MODCOD table is empty");
    return entries_.front().required_cnr_db;
}

double lookup_spectral_efficiency(double cnr_db, const ModcodTable& table,
                                  const std::optional<std::string>& modulation_cap) {
    if (!std::isfinite(cnr_db))
        throw InvalidInputError("lookup_spectral_efficiency: CNR must be finite");
    if (table.entries().empty()) throw ConfigError("MODCOD table is empty");
    const int cap_order =
        modulation_cap ? modulation_order(*modulation_cap) : 0;

    double best = 0.0;
    bool any_eligible = false;
    for (const auto& entry : table.entries()) {
        if (cap_order > 0 && entry.modulation_order > cap_order) continue;
        any_eligible = true;
        if (entry.required_cnr_db <= cnr_db) best = entry.spectral_efficiency;
    }
    if (!any_eligible)
        throw ConfigError("modulation cap '" + *modulation_cap +
                          "' excludes every MODCOD table entry");
    return best;
}

double channel_capacity(double spectral_efficiency, double bandwidth_mhz,
                        int channels, double reuse_factor) {
    if (spectral_efficiency < 0.0)
        throw InvalidInputError("channel_capacity: spectral efficiency must be >= 0");
    if (!(bandwidth_mhz > 0.0))
        throw InvalidInputError("channel_capacity: bandwidth must be positive");
    if (channels < 1)
        throw InvalidInputError("channel_capacity: channel count must be >= 1");
    if (!(reuse_factor >= 1.0))
        throw InvalidInputError("channel_capacity: reuse factor must be >= 1");
    return spectral_efficiency * bandwidth_mhz * static_cast<double>(channels) *
           reuse_factor;
}

double area_capacity(double channel_capacity_mbps, double coverage_area_km2) {
    if (!(coverage_area_km2 > 0.0))
        throw InvalidInputError("area_capacity: coverage area must be positive");
    if (channel_capacity_mbps < 0.0)
        throw InvalidInputError("area_capacity: channel capacity must be >= 0");
    return channel_capacity_mbps / coverage_area_km2;
}

}  // namespace leosim::capacity
