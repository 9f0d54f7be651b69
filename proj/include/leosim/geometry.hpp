// Stochastic-geometry quantities of a constellation: density, coverage,
// mean satellite separation and the slant path from terminal to satellite.
#pragma once

#include "leosim/constants.hpp"

namespace leosim::geometry {

struct GeometryResult {
    double network_density_per_km2 = 0.0;
    double coverage_area_km2 = 0.0;
    double mean_separation_km = 0.0;
    double slant_path_km = 0.0;
};

/// Satellites per km2 of Earth surface.
double network_density(int satellite_count, const PhysicalConstants& constants = {});

/// Earth surface area divided by satellite count; reciprocal of the density.
double coverage_area(int satellite_count, const PhysicalConstants& constants = {});

/// Mean distance between neighboring satellites: sqrt(1/density) / 2.
double mean_separation(double network_density_per_km2);

/// Terminal-to-satellite path: hypotenuse of altitude and mean separation.
double slant_path(double altitude_km, double mean_separation_km);

/// Full chain for `satellite_count` satellites at `altitude_km`.
GeometryResult constellation_geometry(int satellite_count, double altitude_km,
                                      const PhysicalConstants& constants = {});

}  // namespace leosim::geometry
