#pragma once

#include <algorithm>
#include <cmath>
#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include "slideocam/geometry.hpp"
#include "slideocam/units.hpp"

namespace test_support
{

using slideocam::DesignParameters;
namespace units = slideocam::units;

/// Orthoglide layouts with p = 20 mm, one cam and e = a4 + b.
inline DesignParameters orthoglide_case(char name)
{
    double a4 = 0.0;
    double b = 0.0;
    switch (name)
    {
        case 'a': a4 = 2.5; b = 1.25; break;
        case 'b': a4 = 4.0; b = 0.25; break;
        case 'c': a4 = 4.0; b = 1.0; break;
        case 'd': a4 = 3.35; b = 1.9; break;
        default: throw std::invalid_argument("unknown case");
    }
    DesignParameters p;
    p.pitch = units::from_mm(20.0);
    p.roller_radius = units::from_mm(a4);
    p.camshaft_radius = units::from_mm(b);
    p.eta = (p.roller_radius + p.camshaft_radius) / p.pitch;
    p.cams = 1;
    p.torque = 1.2;
    p.width = units::from_mm(20.0);
    return p;
}

/// Random design inside the admissible region: eta > 1/(2 pi), 2 a4 < p,
/// a4 + b <= e.
inline DesignParameters random_design(std::mt19937_64& rng)
{
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    DesignParameters p;
    p.pitch = units::from_mm(5.0 + 45.0 * unit(rng));
    p.eta = 1.0 / units::two_pi + 0.01 + 0.3 * unit(rng);
    const double e = p.eta * p.pitch;
    const double a4_max = std::min(0.45 * p.pitch, 0.95 * e);
    p.roller_radius = (0.05 + 0.95 * unit(rng)) * a4_max;
    p.camshaft_radius = unit(rng) * (e - p.roller_radius);
    p.cams = 1;
    p.torque = 0.1 + 10.0 * unit(rng);
    p.width = units::from_mm(20.0);
    return p;
}

inline std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline std::string source_path(const std::string& relative)
{
    return std::string(SLIDEOCAM_SOURCE_DIR) + "/" + relative;
}

} // namespace test_support
