#pragma once

#include <utility>
#include <variant>

#include "ppwell/errors.h"

namespace ppwell {

/// Observation at a single (dimensional or dimensionless) depth.
struct PointDepth {
    double z = 0.0;
};

/// Observation averaged over the depth interval [z1, z2].
struct DepthInterval {
    double z1 = 0.0;
    double z2 = 0.0;
};

using Depth = std::variant<PointDepth, DepthInterval>;

/// Physical well and aquifer parameters, SI units assumed.
struct DimensionalScenario {
    double Q = 0.0;    ///< pumping rate [m^3/s]
    double K_r = 0.0;  ///< horizontal hydraulic conductivity [m/s]
    double K_z = 0.0;  ///< vertical hydraulic conductivity [m/s]
    double S_s = 0.0;  ///< specific storage [1/m]
    double b = 0.0;    ///< aquifer thickness [m]
    double r_w = 0.0;  ///< well radius [m]
    double d = 0.0;    ///< depth of screen top [m]
    double l = 0.0;    ///< depth of screen bottom [m]
    double C_w = 0.0;  ///< wellbore storage, volume per unit drawdown [m^2]

    void validate() const;

    /// Storage of a free-surface casing of radius r_c: pi r_c^2.
    static double casing_storage(double r_c);
};

/// Observation location in physical units.
struct ObservationSpec {
    double r = 0.0;  ///< radial distance from the well axis [m]
    Depth depth = PointDepth{};
};

/// Complete dimensionless parameter set.
struct DimensionlessScenario {
    double r_D = 0.0;   ///< r / b
    double r_wD = 1.0;  ///< r_w / r
    double C_wD = 0.0;  ///< C_w / (pi S_s r_w^2 b)
    double d_D = 0.0;   ///< d / b
    double l_D = 1.0;   ///< l / b
    double K_D = 1.0;   ///< K_z / K_r
    Depth observation = PointDepth{0.5};

    /// r_D sqrt(K_D).
    double beta() const;
    bool is_fully_penetrating() const { return d_D == 0.0 && l_D == 1.0; }
    bool is_point() const { return std::holds_alternative<PointDepth>(observation); }

    /// Throws ValidationError naming the violated invariant.
    void validate() const;
};

/// The four quantities needed to recover physical values from a
/// dimensionless scenario.
struct ReferenceScales {
    double Q = 1.0;
    double K_r = 1.0;
    double S_s = 1.0;
    double b = 1.0;
};

struct TimeScaling {
    double t_s = 0.0;      ///< alpha_s t / r^2
    double alpha_s = 0.0;  ///< K_r / S_s [m^2/s]
};

DimensionlessScenario nondimensionalize(const DimensionalScenario& dim, const ObservationSpec& obs);

std::pair<DimensionalScenario, ObservationSpec> redimensionalize(const DimensionlessScenario& sc,
                                                                 const ReferenceScales& ref);

TimeScaling dimensionless_time(const DimensionalScenario& dim, double r, double t);

/// s = s_D Q / (4 pi K_r b).
double dimensional_drawdown(double s_D, const DimensionalScenario& dim);

} // namespace ppwell
