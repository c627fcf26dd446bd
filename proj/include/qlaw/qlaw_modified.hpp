#ifndef QLAW_MODIFIED_HPP
#define QLAW_MODIFIED_HPP

#include <optional>

#include "qlaw/elements.hpp"
#include "qlaw/types.hpp"

namespace qlaw {

/**
 * Configuration of the stability-preserving law. The best-case-rate
 * coefficients are frozen in semi-major axis above a_star = zeta * a_target
 * and in eccentricity above 1 - delta_e, which bounds sacrificial overshoot
 * and keeps every coefficient positive and finite.
 */
struct ModifiedConfig {
    double w_a = 1.0;
    double w_e = 1.0;
    double w_i = 1.0;

    double zeta = 2.0;         // overshoot factor, in (1, 3)
    double delta_e = 0.05;     // eccentricity guard, in (0, 1)
    double rp_min = 6578.137;  // minimum periapsis radius [km]

    bool penalty = false;      // optional classical periapsis factor (1 + w_p * P)
    double w_p = 1.0;
    double k = 100.0;

    void validate() const;
};

/// A clamped best-case-rate coefficient and its non-zero partials.
struct KaCoefficient {
    double value = 0.0;  // [s^2/km^2]
    double d_a = 0.0;
    double d_e = 0.0;
};
struct KeCoefficient {
    double value = 0.0;  // [s^2]
    double d_a = 0.0;
    double d_e = 0.0;
};
struct KiCoefficient {
    double value = 0.0;  // [s^2]
    double d_a = 0.0;
    double d_argp = 0.0;  // d/de is dropped by design
};

/// First-order under-approximation of the normal-thrust geometry factor and
/// its argp derivative.
struct FiApprox {
    double value = 0.0;
    double d_argp = 0.0;
};

/// One term of the modified function: value and its non-zero partials.
struct VTerm {
    double value = 0.0;  // [s^2]
    double d_a = 0.0;
    double d_e = 0.0;
    double d_i = 0.0;
    double d_argp = 0.0;
};

/// Full evaluation: value, gradient over (a, e, i, raan, argp), per-term
/// values and coefficients.
struct ModifiedEval {
    double value = 0.0;  // [s^2]
    Vec5 gradient = Vec5::Zero();
    double v_a = 0.0, v_e = 0.0, v_i = 0.0;
    double k_a = 0.0, k_e = 0.0, k_i = 0.0;
};

/// Semi-major-axis coefficient 1/a_dot_xx^2 with the a-dependence frozen
/// above a_star. f is the acceleration magnitude [km/s^2].
KaCoefficient k_a_tilde(const OrbitalElements& el, double f, double mu, double a_star);

/// Semi-major-axis term K_a * (a - a_target)^2. The e-partial is gated off
/// when the periapsis radius is at or below rp_min, so the law cannot buy
/// a-progress with periapsis-lowering eccentricity growth.
VTerm v_a_gradient(const OrbitalElements& el, double a_target, double f, double mu,
                   double a_star, double rp_min);

/// Eccentricity coefficient with the a-dependence frozen above a_star and
/// the e-dependence frozen above 1 - delta_e.
KeCoefficient k_e_tilde(const OrbitalElements& el, double f, double mu, double a_star,
                        double delta_e);

/// Eccentricity term K_e * (e - e_target)^2.
VTerm v_e_gradient(const OrbitalElements& el, double e_target, double f, double mu,
                   double a_star, double delta_e);

/// 1 - e^2 sin^2(w)/2 - e|cos w| and its argp derivative. Dominates the
/// exact factor sqrt(1 - e^2 sin^2 w) - e|cos w| everywhere, so the derived
/// best-case inclination rate is a uniform under-approximation.
FiApprox f_i_approx(double e, double argp);

/// Inclination coefficient; e-partial dropped, a-dependence frozen above
/// a_star, e clamped at 1 - delta_e.
KiCoefficient k_i_tilde(const OrbitalElements& el, double f, double mu, double a_star,
                        double delta_e);

/// Inclination term K_i * (i - i_target)^2.
VTerm v_i_gradient(const OrbitalElements& el, double i_target, double f, double mu,
                   double a_star, double delta_e);

/**
 * Weighted modified Lyapunov function over the targeted subset of
 * {a, e, i}, with its analytic gradient. Requires a semi-major-axis target
 * (a_star = zeta * a_target anchors every coefficient clamp); raan/argp
 * targets are not supported by this law.
 */
ModifiedEval v_tilde_eval(const OrbitalElements& el, const TargetSpec& target, double f,
                          double mu, const ModifiedConfig& cfg);

/// Same contract as thrust_direction: -Phi^T g / |Phi^T g|, nullopt on a
/// vanishing image.
std::optional<Vec3> modified_thrust_direction(const ModifiedEval& eval, const Mat53& phi);

}  // namespace qlaw

#endif  // QLAW_MODIFIED_HPP
