#include "qlaw/sun.hpp"

#include <cmath>

#include "qlaw/elements.hpp"

namespace qlaw {

Vec3 sun_direction(double t, double lon0, const PhysicalConstants& pc) {
    const double lon = lon0 + kTwoPi * (t / pc.year_s);
    const double cl = std::cos(lon);
    const double sl = std::sin(lon);
    const double ce = std::cos(pc.obliquity);
    const double se = std::sin(pc.obliquity);
    // Ecliptic basis: x along the equinox, y tilted by the obliquity.
    return {cl, sl * ce, sl * se};
}

bool is_eclipsed(const Vec3& position, const Vec3& sun_dir, const PhysicalConstants& pc) {
    const double along = position.dot(sun_dir);
    if (!(along < 0.0)) return false;  // sunlit side, strict
    const Vec3 across = position - along * sun_dir;
    return across.norm() < pc.r_earth;
}

}  // namespace qlaw
