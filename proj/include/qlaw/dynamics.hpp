#ifndef QLAW_DYNAMICS_HPP
#define QLAW_DYNAMICS_HPP

#include <utility>

#include "qlaw/constants.hpp"
#include "qlaw/elements.hpp"
#include "qlaw/types.hpp"

namespace qlaw {

/// Perturbing acceleration in the orbit-fixed radial / tangential
/// (along-track, in-plane) / normal frame [km/s^2].
struct RtnAcceleration {
    double radial = 0.0;
    double tangential = 0.0;
    double normal = 0.0;

    Vec3 vec() const { return {radial, tangential, normal}; }
    static RtnAcceleration from(const Vec3& v) { return {v.x(), v.y(), v.z()}; }

    RtnAcceleration& operator+=(const RtnAcceleration& o) {
        radial += o.radial;
        tangential += o.tangential;
        normal += o.normal;
        return *this;
    }
};

/// Constant-thrust electric propulsion stage.
struct SpacecraftParams {
    double mass = 300.0;    // wet mass [kg]
    double thrust = 1.0;    // [N]
    double isp = 3100.0;    // [s]

    /// Thrust in kg*km/s^2 (1 N = 1e-3 kg*km/s^2).
    double thrust_km() const { return thrust * 1e-3; }

    /// Acceleration magnitude at the given mass [km/s^2].
    double accel(double current_mass) const { return thrust_km() / current_mass; }

    void validate() const;  // mass > 0, thrust >= 0, isp > 0
};

struct PerturbationToggles {
    bool j2 = true;
    bool third_body = false;  // point-mass sun, unvalidated stub
    bool srp = false;         // cannonball, unvalidated stub
};

/// Elements + mass + elapsed time: everything the guidance law reads.
struct SpacecraftState {
    OrbitalElements elements;
    double mass = 0.0;  // [kg]
    double t = 0.0;     // seconds since scenario epoch
};

/**
 * Variational matrix Phi mapping an RTN acceleration to the rates of the
 * five slow elements (a, e, i, raan, argp). Requires e and sin(i) away from
 * zero (rows 4-5 divide by them); throws DegenerateOrbitError otherwise.
 */
Mat53 gauss_matrix(const OrbitalElements& el, double mu);

/// Full equations of motion: dZ/dt = Phi * u and the true-anomaly rate.
std::pair<Vec5, double> state_rates(const OrbitalElements& el, const RtnAcceleration& u, double mu);

/// Oblateness acceleration resolved in RTN. Vanishes with j2 = 0.
RtnAcceleration j2_accel_rtn(const OrbitalElements& el, const PhysicalConstants& pc);

/// Point-mass sun third-body acceleration in RTN. Stub for experimentation;
/// not exercised by the shipped scenarios.
RtnAcceleration third_body_sun_rtn(const OrbitalElements& el, double t, double sun_lon0,
                                   const PhysicalConstants& pc);

/// Cannonball solar radiation pressure in RTN, area-to-mass fixed by
/// `srp_coeff` [km/s^2 at 1 AU]. Stub; not exercised by the shipped scenarios.
RtnAcceleration srp_rtn(const OrbitalElements& el, double t, double sun_lon0,
                        double srp_coeff, const PhysicalConstants& pc);

/// Propellant flow: -T/(Isp*g0) while thrusting, 0 while coasting [kg/s].
double mass_rate(const SpacecraftParams& sc, bool thrust_on, const PhysicalConstants& pc);

}  // namespace qlaw

#endif  // QLAW_DYNAMICS_HPP
