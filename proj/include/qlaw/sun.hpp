#ifndef QLAW_SUN_HPP
#define QLAW_SUN_HPP

#include "qlaw/constants.hpp"
#include "qlaw/types.hpp"

namespace qlaw {

/**
 * Low-precision analytic sun model: a unit vector rotating uniformly in a
 * fixed ecliptic plane (one sidereal year per revolution). lon0 is the
 * ecliptic longitude at t = 0; lon0 = 0 puts the sun along +X.
 */
Vec3 sun_direction(double t, double lon0, const PhysicalConstants& pc);

/**
 * Cylindrical umbra test: true iff the position is on the anti-sun side and
 * inside the shadow cylinder of radius r_earth. Strict inequality, so points
 * on the terminator plane or cylinder wall count as sunlit.
 */
bool is_eclipsed(const Vec3& position, const Vec3& sun_dir, const PhysicalConstants& pc);

}  // namespace qlaw

#endif  // QLAW_SUN_HPP
