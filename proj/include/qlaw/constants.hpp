#ifndef QLAW_CONSTANTS_HPP
#define QLAW_CONSTANTS_HPP

namespace qlaw {

/// Physical constants. Units are km, s, rad throughout the library.
struct PhysicalConstants {
    double mu = 398600.4418;        // gravitational parameter [km^3/s^2]
    double r_earth = 6378.137;      // equatorial radius [km]
    double j2 = 1.08263e-3;         // oblateness coefficient [-]
    double g0 = 9.80665e-3;         // standard gravity [km/s^2]
    double au = 1.495978707e8;      // astronomical unit [km]
    double mu_sun = 1.32712440018e11;  // solar gravitational parameter [km^3/s^2]
    double year_s = 365.25636 * 86400.0;  // sidereal year [s]
    double obliquity = 0.4091051766674688;  // ecliptic obliquity, 23.44 deg [rad]

    void validate() const;  // throws ConfigError unless all strictly positive
};

}  // namespace qlaw

#endif  // QLAW_CONSTANTS_HPP
