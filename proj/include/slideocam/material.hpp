#pragma once

#include "units.hpp"

namespace slideocam
{

/// Material limits shared by cam, roller and shafts. All values in Pa.
struct Material
{
    double young_modulus = 210.0 * units::GPa;  ///< E, common to cam and roller
    double camshaft_stress = 150.0 * units::MPa; ///< allowable shear+bending stress in the camshaft
    double bearing_stress = 150.0 * units::MPa;  ///< allowable shear stress in the bearing shaft
    double max_pressure = 1000.0 * units::MPa;   ///< allowable Hertz contact pressure

    friend bool operator==(const Material&, const Material&) = default;
};

} // namespace slideocam
