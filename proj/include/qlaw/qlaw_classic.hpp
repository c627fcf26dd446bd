#ifndef QLAW_CLASSIC_HPP
#define QLAW_CLASSIC_HPP

#include <optional>

#include "qlaw/dynamics.hpp"
#include "qlaw/elements.hpp"
#include "qlaw/types.hpp"

namespace qlaw {

/**
 * Gains and hyperparameters of the classical proximity-quotient feedback law.
 * Weights apply only to targeted elements; the scaling function bounds
 * semi-major-axis growth and the exponential penalty enforces a minimum
 * periapsis radius.
 */
struct ClassicConfig {
    double w_a = 1.0;
    double w_e = 1.0;
    double w_i = 1.0;
    double w_raan = 1.0;
    double w_argp = 1.0;

    bool penalty = true;   // apply the (1 + w_p * P) periapsis factor
    double w_p = 1.0;      // penalty weight
    double k = 100.0;      // penalty steepness
    double rp_min = 6578.137;  // minimum periapsis radius [km]

    double m = 3.0;        // scaling-function offset divisor
    double n = 4.0;        // scaling-function exponent (positive even integer)
    double r_exp = 2.0;    // scaling-function outer root

    double b = 0.01;       // in-plane/out-of-plane blend for the argp rate

    double weight(Element which) const;
    void validate() const;
};

/// Lyapunov value [s^2], its gradient over (a, e, i, raan, argp), and the
/// per-element weighted summands.
struct LyapunovEval {
    double value = 0.0;
    Vec5 gradient = Vec5::Zero();
    Vec5 contributions = Vec5::Zero();
};

/**
 * Best-case rate of the element over all true anomalies and thrust
 * directions, at acceleration magnitude f [km/s^2]. Closed forms for a, e,
 * i; numerically maximized over the osculating orbit for raan and argp (the
 * argp rate blends the in-plane and out-of-plane maxima with weight b).
 */
double max_rate(Element which, const OrbitalElements& el, double f, double mu, double b);

/// The candidate Lyapunov function: weighted sum of squared best-case
/// time-to-go per targeted element, scaled and penalty-weighted.
double q_value(const OrbitalElements& el, const TargetSpec& target, double f, double mu,
               const ClassicConfig& cfg);

/// q_value plus its central-finite-difference gradient.
LyapunovEval q_gradient(const OrbitalElements& el, const TargetSpec& target, double f, double mu,
                        const ClassicConfig& cfg);

/**
 * Steepest-descent thrust direction -Phi^T g / |Phi^T g| in RTN. Returns
 * nullopt when |Phi^T g| vanishes (converged or stationary point); guidance
 * treats that as a coast.
 */
std::optional<Vec3> thrust_direction(const Vec5& gradient, const Mat53& phi);

}  // namespace qlaw

#endif  // QLAW_CLASSIC_HPP
