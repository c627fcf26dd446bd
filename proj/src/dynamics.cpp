#include "qlaw/dynamics.hpp"

#include <cmath>

#include "qlaw/sun.hpp"

namespace qlaw {

void SpacecraftParams::validate() const {
    if (!(mass > 0.0)) throw ConfigError("spacecraft.mass_kg must be > 0");
    if (!(thrust >= 0.0)) throw ConfigError("spacecraft.thrust_N must be >= 0");
    if (!(isp > 0.0)) throw ConfigError("spacecraft.isp_s must be > 0");
}

Mat53 gauss_matrix(const OrbitalElements& el, double mu) {
    if (el.e < kEccFloor * (1.0 - 1e-6))
        throw DegenerateOrbitError("gauss_matrix: eccentricity below the singularity floor");
    const double si = std::sin(el.i);
    if (si < kIncFloor * (1.0 - 1e-6))
        throw DegenerateOrbitError("gauss_matrix: sin(i) below the singularity floor");

    const double p = el.semi_latus();
    const double h = el.ang_momentum(mu);
    const double r = el.radius();
    const double st = std::sin(el.theta);
    const double ct = std::cos(el.theta);
    const double lat = el.theta + el.argp;  // argument of latitude
    const double slat = std::sin(lat);
    const double clat = std::cos(lat);
    const double ci = std::cos(el.i);

    Mat53 phi = Mat53::Zero();
    phi(0, 0) = 2.0 * el.a * el.a / h * el.e * st;
    phi(0, 1) = 2.0 * el.a * el.a / h * p / r;
    phi(1, 0) = p * st / h;
    phi(1, 1) = ((p + r) * ct + r * el.e) / h;
    phi(2, 2) = r * clat / h;
    phi(3, 2) = r * slat / (h * si);
    phi(4, 0) = -p * ct / (el.e * h);
    phi(4, 1) = (p + r) * st / (el.e * h);
    phi(4, 2) = -r * slat * ci / (h * si);
    return phi;
}

std::pair<Vec5, double> state_rates(const OrbitalElements& el, const RtnAcceleration& u,
                                    double mu) {
    const Mat53 phi = gauss_matrix(el, mu);
    const Vec5 dz = phi * u.vec();

    const double p = el.semi_latus();
    const double h = el.ang_momentum(mu);
    const double r = el.radius();
    const double st = std::sin(el.theta);
    const double ct = std::cos(el.theta);
    const double dtheta =
        h / (r * r) + (p * ct * u.radial - (p + r) * st * u.tangential) / (el.e * h);
    return {dz, dtheta};
}

RtnAcceleration j2_accel_rtn(const OrbitalElements& el, const PhysicalConstants& pc) {
    const double r = el.radius();
    const double lat = el.theta + el.argp;
    const double si = std::sin(el.i);
    const double slat = std::sin(lat);
    const double k = -1.5 * pc.j2 * pc.mu * pc.r_earth * pc.r_earth / (r * r * r * r);
    return {k * (1.0 - 3.0 * si * si * slat * slat),
            k * (si * si * std::sin(2.0 * lat)),
            k * (std::sin(2.0 * el.i) * slat)};
}

namespace {

/// RTN basis at the current anomaly, as rows of a 3x3 matrix.
Eigen::Matrix3d rtn_basis(const CartesianState& state) {
    const Vec3 rhat = state.position.normalized();
    const Vec3 what = state.position.cross(state.velocity).normalized();
    const Vec3 that = what.cross(rhat);
    Eigen::Matrix3d m;
    m.row(0) = rhat;
    m.row(1) = that;
    m.row(2) = what;
    return m;
}

}  // namespace

RtnAcceleration third_body_sun_rtn(const OrbitalElements& el, double t, double sun_lon0,
                                   const PhysicalConstants& pc) {
    const CartesianState state = coe_to_cartesian(el, pc.mu);
    const Vec3 s = pc.au * sun_direction(t, sun_lon0, pc);
    const Vec3 d = s - state.position;
    const Vec3 accel = pc.mu_sun * (d / std::pow(d.norm(), 3) - s / std::pow(s.norm(), 3));
    return RtnAcceleration::from(rtn_basis(state) * accel);
}

RtnAcceleration srp_rtn(const OrbitalElements& el, double t, double sun_lon0, double srp_coeff,
                        const PhysicalConstants& pc) {
    const CartesianState state = coe_to_cartesian(el, pc.mu);
    const Vec3 sdir = sun_direction(t, sun_lon0, pc);
    if (is_eclipsed(state.position, sdir, pc)) return {};
    return RtnAcceleration::from(rtn_basis(state) * (-srp_coeff * sdir));
}

double mass_rate(const SpacecraftParams& sc, bool thrust_on, const PhysicalConstants& pc) {
    if (!thrust_on) return 0.0;
    return -sc.thrust_km() / (sc.isp * pc.g0);
}

}  // namespace qlaw
