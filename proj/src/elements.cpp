#include "qlaw/elements.hpp"

#include <algorithm>
#include <cmath>

namespace qlaw {

void PhysicalConstants::validate() const {
    auto positive = [](double v, const char* name) {
        if (!(v > 0.0) || !std::isfinite(v))
            throw ConfigError(std::string("constants.") + name + " must be strictly positive");
    };
    positive(mu, "mu");
    positive(r_earth, "r_earth");
    positive(j2, "j2");
    positive(g0, "g0");
    positive(au, "au");
    positive(mu_sun, "mu_sun");
    positive(year_s, "year_s");
    positive(obliquity, "obliquity");
}

double wrap_two_pi(double angle) {
    double w = std::fmod(angle, kTwoPi);
    if (w < 0.0) w += kTwoPi;
    return w;
}

double wrap_signed(double angle) {
    double w = std::remainder(angle, kTwoPi);  // [-pi, pi]
    if (w <= -kPi) w += kTwoPi;
    return w;
}

void OrbitalElements::normalize_angles() {
    raan = wrap_two_pi(raan);
    argp = wrap_two_pi(argp);
    theta = wrap_two_pi(theta);
}

void OrbitalElements::validate() const {
    if (!std::isfinite(a) || !std::isfinite(e) || !std::isfinite(i) || !std::isfinite(raan) ||
        !std::isfinite(argp) || !std::isfinite(theta))
        throw ConfigError("orbital elements must be finite");
    if (!(a > 0.0)) throw ConfigError("initial_orbit.a_km must be > 0");
    if (!(e >= kEccFloor && e < 1.0))
        throw ConfigError("initial_orbit.e must lie in [1e-4, 1) (elliptic, above the floor)");
    if (!(i >= kIncFloor && i <= kPi - kIncFloor))
        throw ConfigError("initial_orbit.i_deg must keep i in [1e-4, pi - 1e-4] rad");
    if (!(periapsis() > 0.0)) throw ConfigError("initial_orbit: periapsis radius must be > 0");
}

double element_get(const OrbitalElements& el, Element which) {
    switch (which) {
        case Element::SemiMajorAxis: return el.a;
        case Element::Eccentricity: return el.e;
        case Element::Inclination: return el.i;
        case Element::Raan: return el.raan;
        case Element::ArgPerigee: return el.argp;
    }
    return 0.0;
}

void element_set(OrbitalElements& el, Element which, double value) {
    switch (which) {
        case Element::SemiMajorAxis: el.a = value; break;
        case Element::Eccentricity: el.e = value; break;
        case Element::Inclination: el.i = value; break;
        case Element::Raan: el.raan = value; break;
        case Element::ArgPerigee: el.argp = value; break;
    }
}

double Tolerances::get(Element which) const {
    switch (which) {
        case Element::SemiMajorAxis: return a;
        case Element::Eccentricity: return e;
        case Element::Inclination: return i;
        case Element::Raan: return raan;
        case Element::ArgPerigee: return argp;
    }
    return 0.0;
}

void Tolerances::validate() const {
    if (!(a > 0.0 && e > 0.0 && i > 0.0 && raan > 0.0 && argp > 0.0))
        throw ConfigError("target.tolerances must all be > 0");
}

bool TargetSpec::targets(Element which) const {
    switch (which) {
        case Element::SemiMajorAxis: return a.has_value();
        case Element::Eccentricity: return e.has_value();
        case Element::Inclination: return i.has_value();
        case Element::Raan: return raan.has_value();
        case Element::ArgPerigee: return argp.has_value();
    }
    return false;
}

double TargetSpec::value(Element which) const {
    switch (which) {
        case Element::SemiMajorAxis:
            if (a) return *a;
            break;
        case Element::Eccentricity:
            if (e) return *e;
            break;
        case Element::Inclination:
            if (i) return *i;
            break;
        case Element::Raan:
            if (raan) return *raan;
            break;
        case Element::ArgPerigee:
            if (argp) return *argp;
            break;
    }
    throw ConfigError("target element queried but not targeted");
}

void TargetSpec::validate() const {
    if (!a && !e && !i && !raan && !argp)
        throw ConfigError("target: at least one element must be targeted");
    tol.validate();
    if (a && !(*a > 0.0)) throw ConfigError("target.a_km must be > 0");
    if (e && !(*e >= 0.0 && *e < 1.0)) throw ConfigError("target.e must lie in [0, 1)");
    if (i && !(*i >= 0.0 && *i <= kPi)) throw ConfigError("target.i_deg must keep i in [0, pi]");
}

CartesianState coe_to_cartesian(const OrbitalElements& el, double mu) {
    const double p = el.semi_latus();
    const double r = el.radius();
    const double ct = std::cos(el.theta);
    const double st = std::sin(el.theta);

    const Vec3 r_pf(r * ct, r * st, 0.0);
    const double vf = std::sqrt(mu / p);
    const Vec3 v_pf(-vf * st, vf * (el.e + ct), 0.0);

    const Eigen::Matrix3d rot =
        (Eigen::AngleAxisd(el.raan, Vec3::UnitZ()) * Eigen::AngleAxisd(el.i, Vec3::UnitX()) *
         Eigen::AngleAxisd(el.argp, Vec3::UnitZ()))
            .toRotationMatrix();

    return {rot * r_pf, rot * v_pf};
}

OrbitalElements cartesian_to_coe(const CartesianState& state, double mu) {
    const Vec3& r = state.position;
    const Vec3& v = state.velocity;
    const double rn = r.norm();
    if (!r.allFinite() || !v.allFinite() || !(rn > 0.0))
        throw DegenerateOrbitError("cartesian_to_coe: non-finite or zero-radius state");

    const Vec3 hvec = r.cross(v);
    const double hn = hvec.norm();
    if (hn <= 1e-12 * rn * std::max(v.norm(), 1e-300))
        throw DegenerateOrbitError("cartesian_to_coe: rectilinear state (h ~ 0)");

    const double energy = 0.5 * v.squaredNorm() - mu / rn;
    if (!(energy < 0.0))
        throw DegenerateOrbitError("cartesian_to_coe: non-elliptic state (specific energy >= 0)");

    OrbitalElements el;
    el.a = -mu / (2.0 * energy);
    const Vec3 evec = v.cross(hvec) / mu - r / rn;
    el.e = evec.norm();
    el.i = std::acos(std::clamp(hvec.z() / hn, -1.0, 1.0));

    // Representability floors; slight slack so round trips at the floor pass.
    if (el.e < kEccFloor - 1e-9)
        throw DegenerateOrbitError("cartesian_to_coe: eccentricity below representability floor");
    if (el.i < kIncFloor - 1e-9 || el.i > kPi - kIncFloor + 1e-9)
        throw DegenerateOrbitError("cartesian_to_coe: inclination below representability floor");

    const Vec3 node(-hvec.y(), hvec.x(), 0.0);  // z_hat x h
    el.raan = wrap_two_pi(std::atan2(node.y(), node.x()));
    // atan2 forms stay accurate where acos degenerates (angles near 0 or pi)
    el.argp = wrap_two_pi(std::atan2(hvec.dot(node.cross(evec)) / hn, node.dot(evec)));
    el.theta = wrap_two_pi(std::atan2(hvec.dot(evec.cross(r)) / hn, evec.dot(r)));
    return el;
}

double element_distance(Element which, double value, double target) {
    switch (which) {
        case Element::SemiMajorAxis:
        case Element::Eccentricity:
        case Element::Inclination:
            return value - target;
        case Element::Raan:
        case Element::ArgPerigee:
            return wrap_signed(value - target);
    }
    return 0.0;
}

}  // namespace qlaw
