// Physical constants shared by the geometry and link-budget models.
#pragma once

namespace leosim {

struct PhysicalConstants {
    double earth_surface_area_km2 = 510072000.0;
    double speed_of_light_m_s = 2.998e8;
    double boltzmann_j_k = 1.38064852e-23;

    /// Throws InvalidInputError unless all constants are strictly positive.
    void validate() const;
};

}  // namespace leosim
