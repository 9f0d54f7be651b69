// Error types shared across the simulator.
#pragma once

#include <stdexcept>
#include <string>

namespace leosim {

/// A model operation received an argument outside its domain
/// (non-positive counts, negative distances, non-finite dB values...).
class InvalidInputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Broken configuration: malformed assets, schema violations, bad flags.
/// Maps to CLI exit code 2.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed bulk input data (region tables and the like).
/// Maps to CLI exit code 3.
class DataError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace leosim
