#pragma once

// Laser-sail kinematics: relations between the system parameters (power,
// aperture, wavelength, sail material) and the achieved speed, time and
// distance at the point where the diffraction-limited spot equals the sail.
//
// All relations are non-relativistic. Results with beta0 >= 0.5 carry
// `beyond_validity`; beta0 >= 1 is rejected with DomainError.

#include <optional>

#include "sailcost/quantities.hpp"

namespace sailcost {

/// Beta above which the non-relativistic relations are flagged.
inline constexpr double nonrelativistic_validity_limit = 0.5;

struct SailSpec {
    double thickness = 0.0;                           // h, m
    double density = 0.0;                             // rho, kg/m^3
    double reflectivity = 1.0;                        // eps_r, 0..1
    double absorptivity = 0.0;                        // alpha, 0..1
    double shape_factor = circular_shape_factor;      // xi, area = xi D^2
    std::optional<double> diameter;                   // D, m
    std::optional<double> yield_strength;             // S_y, Pa
    double stress_factor = 1.0;                       // s

    /// Throws ValidationError naming the offending field. The thickness check is
    /// skipped for strength-limited sails, whose thickness is derived.
    void validate(bool require_thickness = true) const;

    /// xi D^2 h rho. Requires `diameter`.
    [[nodiscard]] double mass() const;

    /// xi h rho, the areal density times the shape factor (kg/m^2).
    [[nodiscard]] double areal_mass_factor() const { return shape_factor * thickness * density; }

    friend bool operator==(const SailSpec&, const SailSpec&) = default;
};

/// Array properties that do not change when the aperture or power are traded.
struct ArrayOptics {
    double wavelength = 1e-6;                         // lambda, m
    double diffraction_factor = 1.22;                 // alpha_d
    double shape_factor = circular_shape_factor;      // xi_arr, area = xi_arr d^2
    double main_beam_fraction = 1.0;                  // eps_b

    void validate() const;

    friend bool operator==(const ArrayOptics&, const ArrayOptics&) = default;
};

struct ArraySpec {
    ArrayOptics optics;
    double aperture = 0.0;                            // d, m
    double power = 0.0;                               // P0, main-beam power, W

    void validate() const;

    /// P0 / eps_b, the total optical power that has to be bought.
    [[nodiscard]] double optical_power() const { return power / optics.main_beam_fraction; }

    friend bool operator==(const ArraySpec&, const ArraySpec&) = default;
};

struct Payload {
    double mass = 0.0;                                // m0, kg

    void validate() const;

    friend bool operator==(const Payload&, const Payload&) = default;
};

struct KinematicsResult {
    double speed = 0.0;               // v0, m/s
    double beta = 0.0;                // v0 / c
    double time = 0.0;                // t0, s; 0 when not accelerating
    double distance = 0.0;            // L0, m
    double coast_speed = 0.0;         // v_inf = sqrt(2) v0
    double acceleration = 0.0;        // v0 / t0, m/s^2
    double aperture_flux = 0.0;       // W/m^2
    double total_mass = 0.0;          // sail + payload, kg
    double sail_diameter = 0.0;       // D used, m
    bool accelerating = true;         // false at zero power
    bool beyond_validity = false;     // beta >= 0.5
};

/// Momentum coupling 2 eps_r + (1 - eps_r) alpha.
[[nodiscard]] double eta(const SailSpec& sail);

/// Sail of given diameter carrying an arbitrary payload.
[[nodiscard]] KinematicsResult kinematics_non_optimized(const ArraySpec& array, const SailSpec& sail,
                                                        const Payload& payload);

/// Sail mass equal to payload mass; the diameter is derived as sqrt(m0 / (xi h rho)).
[[nodiscard]] KinematicsResult kinematics_optimized(const ArraySpec& array, const SailSpec& sail,
                                                    const Payload& payload);

/// Sail diameter for which the sail mass equals the payload mass.
[[nodiscard]] double matched_sail_diameter(const SailSpec& sail, const Payload& payload);

/// Main-beam power needed to reach `beta` with the optimized sail and aperture `aperture`.
[[nodiscard]] double required_power(double beta, const ArrayOptics& optics, double aperture,
                                    const SailSpec& sail, const Payload& payload);

/// Same inversion for a sail of fixed diameter (`sail.diameter` required).
[[nodiscard]] double required_power_non_optimized(double beta, const ArrayOptics& optics,
                                                  double aperture, const SailSpec& sail,
                                                  const Payload& payload);

/// P0 / (xi_arr d^2).
[[nodiscard]] double aperture_flux(const ArraySpec& array);

struct SailGeometry {
    double diameter;   // m
    double thickness;  // m
};

/// Diameter and thickness of the lightest sail whose yield strength holds the
/// beam pressure while its mass equals the payload mass. Requires `yield_strength`.
///
/// The hoop condition h = s P0 eta / (pi D c S_y) combined with
/// m0 = xi D^2 h rho gives D = pi m0 c S_y / (xi rho s P0 eta).
[[nodiscard]] SailGeometry strength_limited_geometry(double power, const SailSpec& sail,
                                                     const Payload& payload);

/// Speed fraction of the strength-limited, mass-matched sail:
/// beta0 = sqrt(pi d S_y / (2 xi rho c^2 lambda alpha_d s)). Independent of power.
[[nodiscard]] double strength_limited_beta(const ArraySpec& array, const SailSpec& sail);

/// Kinematics of the strength-limited sail: geometry from `strength_limited_geometry`,
/// then the fixed-diameter relations.
[[nodiscard]] KinematicsResult kinematics_strength_limited(const ArraySpec& array,
                                                           const SailSpec& sail,
                                                           const Payload& payload);

}  // namespace sailcost
