#include "leosim/geometry.hpp"

#include <cmath>

#include "leosim/errors.hpp"

namespace leosim::geometry {

double network_density(int satellite_count, const PhysicalConstants& constants) {
    constants.validate();
    if (satellite_count < 1)
        throw InvalidInputError("network_density: satellite_count must be >= 1");
    return static_cast<double>(satellite_count) / constants.earth_surface_area_km2;
}

double coverage_area(int satellite_count, const PhysicalConstants& constants) {
    constants.validate();
    if (satellite_count < 1)
        throw InvalidInputError("coverage_area: satellite_count must be >= 1");
    return constants.earth_surface_area_km2 / static_cast<double>(satellite_count);
}

double mean_separation(double network_density_per_km2) {
    if (!(network_density_per_km2 > 0.0))
        throw InvalidInputError("mean_separation: density must be positive");
    return std::sqrt(1.0 / network_density_per_km2) / 2.0;
}

double slant_path(double altitude_km, double mean_separation_km) {
    if (!(altitude_km > 0.0))
        throw InvalidInputError("slant_path: altitude must be positive");
    if (mean_separation_km < 0.0)
        throw InvalidInputError("slant_path: separation must be non-negative");
    return std::sqrt(altitude_km * altitude_km +
                     mean_separation_km * mean_separation_km);
}

GeometryResult constellation_geometry(int satellite_count, double altitude_km,
                                      const PhysicalConstants& constants) {
    GeometryResult result;
    result.network_density_per_km2 = network_density(satellite_count, constants);
    result.coverage_area_km2 = coverage_area(satellite_count, constants);
    result.mean_separation_km = mean_separation(result.network_density_per_km2);
    result.slant_path_km = slant_path(altitude_km, result.mean_separation_km);
    return result;
}

}  // namespace leosim::geometry
