#include "sailcost/physics.hpp"

#include <cmath>
#include <sstream>
#include <string>

#include "sailcost/errors.hpp"

namespace sailcost {

namespace {

constexpr double c = speed_of_light;

std::string describe(double value) {
    std::ostringstream out;
    out.precision(17);
    out << value;
    return out.str();
}

void require_positive(double value, const char* field) {
    if (!std::isfinite(value) || value <= 0.0) {
        throw ValidationError(field, std::string(field) + " must be finite and > 0, got " +
                                         describe(value));
    }
}

void require_unit_interval(double value, const char* field) {
    if (!std::isfinite(value) || value < 0.0 || value > 1.0) {
        throw ValidationError(field, std::string(field) + " must lie in [0, 1], got " +
                                         describe(value));
    }
}

double checked(double value, const char* what) {
    if (!std::isfinite(value)) {
        throw NumericRangeError(std::string(what) + " is not finite (" + describe(value) + ")");
    }
    return value;
}

void check_beta(double beta) {
    if (beta >= 1.0) {
        throw DomainError("beta0 = " + describe(beta) +
                          " is not below 1; the non-relativistic model does not apply");
    }
}

// Shared tail of every kinematics path once v0, t0 and the sail diameter are known.
KinematicsResult assemble(const ArraySpec& array, double speed, double time, double diameter,
                          double total_mass) {
    KinematicsResult result;
    result.speed = checked(speed, "v0");
    result.beta = speed / c;
    check_beta(result.beta);
    result.coast_speed = std::sqrt(2.0) * speed;
    result.accelerating = array.power > 0.0;
    if (result.accelerating) {
        result.time = checked(time, "t0");
        result.acceleration = speed / result.time;
    }
    result.sail_diameter = diameter;
    result.distance =
        checked(array.aperture * diameter /
                    (2.0 * array.optics.wavelength * array.optics.diffraction_factor),
                "L0");
    result.aperture_flux = aperture_flux(array);
    result.total_mass = total_mass;
    result.beyond_validity = result.beta >= nonrelativistic_validity_limit;
    return result;
}

}  // namespace

void SailSpec::validate(bool require_thickness) const {
    if (require_thickness) {
        require_positive(thickness, "sail.h");
    }
    require_positive(density, "sail.rho");
    require_unit_interval(reflectivity, "sail.eps_r");
    require_unit_interval(absorptivity, "sail.alpha");
    require_positive(shape_factor, "sail.xi");
    if (diameter) {
        require_positive(*diameter, "sail.D");
    }
    if (yield_strength) {
        require_positive(*yield_strength, "sail.S_y");
    }
    require_positive(stress_factor, "sail.s");
    // eta = 0 only for eps_r = 0 and alpha = 0: a transparent sail feels no push.
    if (sailcost::eta(*this) <= 0.0) {
        throw ValidationError("sail.alpha",
                              "sail.alpha must be > 0 when sail.eps_r = 0 (no momentum coupling)");
    }
}

double SailSpec::mass() const {
    if (!diameter) {
        throw DomainError("sail mass requires a sail diameter");
    }
    return shape_factor * *diameter * *diameter * thickness * density;
}

void ArrayOptics::validate() const {
    require_positive(wavelength, "array.lambda");
    if (!std::isfinite(diffraction_factor) || diffraction_factor < 1.0) {
        throw ValidationError("array.alpha_d",
                              "array.alpha_d must be >= 1, got " + describe(diffraction_factor));
    }
    require_positive(shape_factor, "array.xi_arr");
    if (!std::isfinite(main_beam_fraction) || main_beam_fraction <= 0.0 ||
        main_beam_fraction > 1.0) {
        throw ValidationError("array.eps_b",
                              "array.eps_b must lie in (0, 1], got " + describe(main_beam_fraction));
    }
}

void ArraySpec::validate() const {
    optics.validate();
    require_positive(aperture, "array.d");
    if (!std::isfinite(power) || power < 0.0) {
        throw ValidationError("array.P0", "array.P0 must be finite and >= 0, got " + describe(power));
    }
}

void Payload::validate() const { require_positive(mass, "payload.m0"); }

double eta(const SailSpec& sail) {
    return 2.0 * sail.reflectivity + (1.0 - sail.reflectivity) * sail.absorptivity;
}

KinematicsResult kinematics_non_optimized(const ArraySpec& array, const SailSpec& sail,
                                          const Payload& payload) {
    array.validate();
    sail.validate();
    payload.validate();
    if (!sail.diameter) {
        throw DomainError("non-optimized kinematics require sail.D");
    }
    const double diameter = *sail.diameter;
    const double total_mass = sail.mass() + payload.mass;
    const double coupling = eta(sail);
    const double lambda_alpha = array.optics.wavelength * array.optics.diffraction_factor;

    const double speed = std::sqrt(array.power * coupling * array.aperture * diameter /
                                   (c * lambda_alpha * total_mass));
    const double time = std::sqrt(c * array.aperture * diameter * total_mass /
                                  (array.power * coupling * lambda_alpha));
    return assemble(array, speed, time, diameter, total_mass);
}

double matched_sail_diameter(const SailSpec& sail, const Payload& payload) {
    return std::sqrt(payload.mass / sail.areal_mass_factor());
}

KinematicsResult kinematics_optimized(const ArraySpec& array, const SailSpec& sail,
                                      const Payload& payload) {
    array.validate();
    sail.validate();
    payload.validate();
    if (sail.diameter) {
        throw DomainError("optimized kinematics derive the sail diameter; sail.D must be absent");
    }
    const double coupling = eta(sail);
    const double lambda_alpha = array.optics.wavelength * array.optics.diffraction_factor;
    const double areal = sail.areal_mass_factor();
    const double m0 = payload.mass;

    const double speed = std::sqrt(array.power * coupling * array.aperture / (2.0 * c * lambda_alpha)) *
                         std::pow(areal * m0, -0.25);
    const double time = std::sqrt(2.0 * c * array.aperture / (array.power * coupling * lambda_alpha)) *
                        std::pow(m0 * m0 * m0 / areal, 0.25);
    return assemble(array, speed, time, matched_sail_diameter(sail, payload), 2.0 * m0);
}

double required_power(double beta, const ArrayOptics& optics, double aperture, const SailSpec& sail,
                      const Payload& payload) {
    optics.validate();
    sail.validate();
    payload.validate();
    require_positive(aperture, "array.d");
    if (!std::isfinite(beta) || beta < 0.0) {
        throw DomainError("beta0 must be finite and >= 0, got " + describe(beta));
    }
    check_beta(beta);
    const double lambda_alpha = optics.wavelength * optics.diffraction_factor;
    return checked(beta * beta * (2.0 * c * c * c * lambda_alpha / (eta(sail) * aperture)) *
                       std::sqrt(sail.areal_mass_factor() * payload.mass),
                   "P0");
}

double required_power_non_optimized(double beta, const ArrayOptics& optics, double aperture,
                                    const SailSpec& sail, const Payload& payload) {
    optics.validate();
    sail.validate();
    payload.validate();
    require_positive(aperture, "array.d");
    if (!sail.diameter) {
        throw DomainError("non-optimized power inversion requires sail.D");
    }
    if (!std::isfinite(beta) || beta < 0.0) {
        throw DomainError("beta0 must be finite and >= 0, got " + describe(beta));
    }
    check_beta(beta);
    const double lambda_alpha = optics.wavelength * optics.diffraction_factor;
    const double total_mass = sail.mass() + payload.mass;
    return checked(beta * beta * c * c * c * lambda_alpha * total_mass /
                       (eta(sail) * aperture * *sail.diameter),
                   "P0");
}

double aperture_flux(const ArraySpec& array) {
    return array.power / (array.optics.shape_factor * array.aperture * array.aperture);
}

SailGeometry strength_limited_geometry(double power, const SailSpec& sail, const Payload& payload) {
    if (!sail.yield_strength || !(*sail.yield_strength > 0.0)) {
        throw DomainError("strength-limited geometry requires sail.S_y > 0");
    }
    if (!(power > 0.0) || !std::isfinite(power)) {
        throw DomainError("strength-limited geometry requires P0 > 0, got " + describe(power));
    }
    sail.validate(false);
    payload.validate();
    const double strength = *sail.yield_strength;
    const double load = sail.stress_factor * power * eta(sail);  // s P0 eta

    SailGeometry geometry{};
    geometry.diameter = checked(pi * payload.mass * c * strength / (sail.shape_factor * sail.density * load),
                                "D");
    geometry.thickness = checked(load / (pi * geometry.diameter * c * strength), "h");
    return geometry;
}

double strength_limited_beta(const ArraySpec& array, const SailSpec& sail) {
    if (!sail.yield_strength || !(*sail.yield_strength > 0.0)) {
        throw DomainError("strength-limited speed requires sail.S_y > 0");
    }
    array.optics.validate();
    require_positive(array.aperture, "array.d");
    require_positive(sail.density, "sail.rho");
    require_positive(sail.stress_factor, "sail.s");
    require_positive(sail.shape_factor, "sail.xi");
    return std::sqrt(pi * array.aperture * *sail.yield_strength /
                     (2.0 * sail.shape_factor * sail.density * c * c * array.optics.wavelength *
                      array.optics.diffraction_factor * sail.stress_factor));
}

KinematicsResult kinematics_strength_limited(const ArraySpec& array, const SailSpec& sail,
                                             const Payload& payload) {
    const SailGeometry geometry = strength_limited_geometry(array.power, sail, payload);
    SailSpec sized = sail;
    sized.diameter = geometry.diameter;
    sized.thickness = geometry.thickness;
    return kinematics_non_optimized(array, sized, payload);
}

}  // namespace sailcost
