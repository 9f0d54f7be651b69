// Minimal RFC-4180 CSV reading and writing. '#' lines are treated as
// comments so data files can carry provenance headers.
#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace leosim::csv {

/// Parse CSV text into rows of fields. Handles quoted fields, embedded
/// commas/quotes/newlines and CRLF line endings. Skips blank lines and
/// lines whose first character is '#'.
std::vector<std::vector<std::string>> parse(std::string_view text);

/// Quote a field if it contains a comma, quote or newline.
std::string escape_field(std::string_view field);

/// Join fields into one CSV line (no trailing newline).
std::string format_row(const std::vector<std::string>& fields);

/// Shortest round-trip decimal form of a double ("nan"-free callers only).
std::string format_double(double value);

}  // namespace leosim::csv
