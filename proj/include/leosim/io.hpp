// Configuration loading and result serialization.
#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "leosim/economics.hpp"
#include "leosim/engine.hpp"
#include "leosim/regional.hpp"

namespace leosim::io {

inline constexpr std::string_view kToolVersion = "leosim 1.0.0";

/// A constellation asset: the design plus, when present, its cost book.
struct ConstellationAsset {
    engine::ConstellationDesign design;
    std::optional<economics::CostBook> costs;
};

/// Load a builtin ("starlink", "kuiper", "oneweb") or a JSON file path.
ConstellationAsset load_constellation(const std::string& name_or_path);

ConstellationAsset parse_constellation_json(const nlohmann::json& j, std::string_view origin);

nlohmann::json design_to_json(const engine::ConstellationDesign& design);
engine::ConstellationDesign design_from_json(const nlohmann::json& j, std::string_view origin);

nlohmann::json cost_book_to_json(const economics::CostBook& book);
economics::CostBook cost_book_from_json(const nlohmann::json& j, std::string_view origin);

nlohmann::json geometry_to_json(const geometry::GeometryResult& g);
nlohmann::json summary_to_json(const engine::SimulationSummary& summary);

/// Per-draw records as CSV (no provenance preamble; callers prepend one).
std::string draws_to_csv(const std::vector<engine::IterationRecord>& draws);

std::string density_sweep_to_csv(const std::vector<double>& densities,
                                 const std::vector<demand::DemandResult>& results);

std::string size_sweep_to_csv(const std::vector<engine::SimulationSummary>& summaries);

/// Long-format assessment rows:
/// region_id,density,decile_band,constellation,capacity_per_user_mbps,cost_per_user_usd,suitable
std::string assessments_to_csv(const std::vector<regional::RegionAssessment>& assessments);

/// FNV-1a 64-bit over bytes.
std::uint64_t fnv1a64(std::string_view bytes);

/// Hash of a canonically-serialized JSON config, as "fnv1a64:<hex>".
std::string config_hash(const nlohmann::json& config);

/// Provenance block embedded in every output file: master seed, asset
/// version, tool version and the config hash. No timestamps -- outputs of
/// identical runs are byte-identical.
nlohmann::json provenance(std::uint64_t master_seed, const nlohmann::json& config);

/// '#'-prefixed provenance preamble for CSV outputs.
std::string csv_preamble(const nlohmann::json& prov);

/// Write via temp file + rename so readers never observe partial content.
void write_atomic(const std::filesystem::path& path, std::string_view content);

std::string read_file(const std::filesystem::path& path);

}  // namespace leosim::io
