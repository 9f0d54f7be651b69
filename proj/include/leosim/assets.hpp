// Builtin data assets: the three shipped constellation parameter sets and
// the DVB-S2 MODCOD threshold table. The embedded text is the single
// source of truth; `leosim validate --dump-assets` exports it to files.
#pragma once

#include <span>
#include <string_view>

namespace leosim::assets {

/// Bumped whenever the embedded assets change; recorded in output headers.
inline constexpr std::string_view kAssetVersion = "builtin-assets-1";

/// Names accepted by load_constellation: "starlink", "kuiper", "oneweb".
std::span<const std::string_view> builtin_names();

bool is_builtin(std::string_view name);

/// JSON text of a builtin constellation (design + cost book).
/// Throws ConfigError for unknown names.
std::string_view constellation_json(std::string_view name);

/// CSV text of the shipped MODCOD threshold table.
std::string_view modcod_csv();

}  // namespace leosim::assets
