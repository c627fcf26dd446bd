#ifndef QLAW_ELEMENTS_HPP
#define QLAW_ELEMENTS_HPP

#include <cmath>
#include <optional>

#include "qlaw/constants.hpp"
#include "qlaw/types.hpp"

namespace qlaw {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;
inline constexpr double kDegToRad = kPi / 180.0;
inline constexpr double kRadToDeg = 180.0 / kPi;

/// Representability floors for the classical element set: e = 0 and i = 0 (or
/// i = pi) make argp/raan undefined, so states are kept clear of them.
inline constexpr double kEccFloor = 1e-4;
inline constexpr double kIncFloor = 1e-4;  // [rad], applied to i and pi - i

/// Wrap an angle into [0, 2*pi).
double wrap_two_pi(double angle);

/// Wrap an angle into (-pi, pi].
double wrap_signed(double angle);

/**
 * Classical orbital elements. Angles in radians, lengths in km.
 * Only the elliptic regime is supported: a > 0, 0 <= e < 1.
 */
struct OrbitalElements {
    double a = 7000.0;  // semi-major axis [km]
    double e = 0.0;     // eccentricity [-]
    double i = 0.0;     // inclination [rad]
    double raan = 0.0;  // right ascension of ascending node [rad]
    double argp = 0.0;  // argument of perigee [rad]
    double theta = 0.0; // true anomaly [rad]

    double semi_latus() const { return a * (1.0 - e * e); }            // p [km]
    double ang_momentum(double mu) const { return std::sqrt(mu * semi_latus()); }  // h [km^2/s]
    double radius() const { return semi_latus() / (1.0 + e * std::cos(theta)); }   // r [km]
    double periapsis() const { return a * (1.0 - e); }                 // r_p [km]
    double apoapsis() const { return a * (1.0 + e); }                  // r_a [km]
    double period(double mu) const { return kTwoPi * std::sqrt(a * a * a / mu); }  // [s]

    /// Wraps i into [0, pi] conventions are the caller's job; this only wraps
    /// raan, argp, theta into [0, 2*pi).
    void normalize_angles();

    /// Throws ConfigError if outside the supported elliptic regime or below
    /// the representability floors.
    void validate() const;
};

/// Read/write a slow element by its matrix-row index.
double element_get(const OrbitalElements& el, Element which);
void element_set(OrbitalElements& el, Element which, double value);

/// Inertial position/velocity.
struct CartesianState {
    Vec3 position = Vec3::Zero();  // [km]
    Vec3 velocity = Vec3::Zero();  // [km/s]
};

/// Absolute convergence tolerances per element (radians for angles).
struct Tolerances {
    double a = 10.0;                      // [km]
    double e = 1e-3;                      // [-]
    double i = 0.01 * kDegToRad;          // [rad]
    double raan = 0.01 * kDegToRad;       // [rad]
    double argp = 0.01 * kDegToRad;       // [rad]

    double get(Element which) const;
    void validate() const;  // all > 0
};

/**
 * Target orbit. An element left unset is free: it carries no term in either
 * guidance law and does not participate in convergence checks.
 */
struct TargetSpec {
    std::optional<double> a;     // [km]
    std::optional<double> e;     // [-]
    std::optional<double> i;     // [rad]
    std::optional<double> raan;  // [rad]
    std::optional<double> argp;  // [rad]
    Tolerances tol;

    bool targets(Element which) const;
    double value(Element which) const;  // throws ConfigError if free
    void validate() const;              // at least one element targeted
};

/// Elements -> inertial state on the osculating ellipse.
CartesianState coe_to_cartesian(const OrbitalElements& el, double mu);

/// Inertial state -> elements. Throws DegenerateOrbitError for rectilinear,
/// non-elliptic, or below-floor states.
OrbitalElements cartesian_to_coe(const CartesianState& state, double mu);

/// Signed distance between an osculating and a target element: plain
/// difference for a, e, i; wrapped into (-pi, pi] for raan and argp.
double element_distance(Element which, double value, double target);

}  // namespace qlaw

#endif  // QLAW_ELEMENTS_HPP
