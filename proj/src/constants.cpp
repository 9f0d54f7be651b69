#include "leosim/constants.hpp"

#include "leosim/errors.hpp"

namespace leosim {

void PhysicalConstants::validate() const {
    if (earth_surface_area_km2 <= 0.0)
        throw InvalidInputError("earth_surface_area_km2 must be positive");
    if (speed_of_light_m_s <= 0.0)
        throw InvalidInputError("speed_of_light_m_s must be positive");
    if (boltzmann_j_k <= 0.0)
        throw InvalidInputError("boltzmann_j_k must be positive");
}

}  // namespace leosim
