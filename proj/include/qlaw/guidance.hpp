#ifndef QLAW_GUIDANCE_HPP
#define QLAW_GUIDANCE_HPP

#include <utility>

#include "qlaw/dynamics.hpp"
#include "qlaw/qlaw_classic.hpp"
#include "qlaw/qlaw_modified.hpp"

namespace qlaw {

enum class GuidanceLaw { Classic, Modified };

/// Coasting policy: thrust is held off while the relative effectivity is
/// below the threshold, and (optionally) inside the Earth shadow.
struct CoastPolicy {
    double eta_threshold = 0.0;  // in [0, 1); 0 = continuous thrust
    int n_theta = 100;           // orbit samples for the effectivity extrema
    bool eclipse_coast = true;

    void validate() const;  // n_theta >= 16, threshold in [0, 1)
};

struct ControllerConfig {
    GuidanceLaw law = GuidanceLaw::Modified;
    ClassicConfig classic;
    ModifiedConfig modified;
    CoastPolicy coast;

    void validate() const;
};

/// One guidance decision. direction is a unit RTN vector whenever thrust_on;
/// eta_r and vdot are recorded even when coasting.
struct GuidanceCommand {
    bool thrust_on = false;
    Vec3 direction = Vec3::Zero();
    double alpha = 0.0;    // in-plane thrust angle from tangential [rad]
    double beta = 0.0;     // out-of-plane thrust angle [rad]
    double eta_r = 1.0;    // relative effectivity in [0, 1]
    double vdot = 0.0;     // law derivative at the current anomaly [s^2/s]
    double value = 0.0;    // Lyapunov value [s^2]
    bool stationary = false;  // law gradient image vanished; coasting
    bool converged = false;
};

/**
 * Extrema of the law derivative over the osculating orbit: sweeps n_theta
 * uniform true-anomaly samples holding the slow elements and the gradient
 * fixed, evaluating -f * |Phi^T g| at each. Returns (min, max).
 */
std::pair<double, double> vdot_extrema(const OrbitalElements& el, const Vec5& gradient,
                                       double f, double mu, int n_theta);

/// Relative effectivity: 1 at the best anomaly, 0 at the worst, 1 on a
/// degenerate orbit where the derivative is anomaly-independent.
double effectivity(double vdot_n, double vdot_nn, double vdot_nx);

/// True iff every targeted element is within its tolerance.
bool check_convergence(const OrbitalElements& el, const TargetSpec& target);

/**
 * One closed-loop guidance decision. f is the current acceleration magnitude
 * T/m [km/s^2]; eclipsed is the geometric shadow flag (gated by the coast
 * policy). Thrust is on iff not eclipse-coasting, not converged, effectivity
 * is at or above threshold, and the law yields a direction.
 */
GuidanceCommand guidance_step(const SpacecraftState& state, double f, const TargetSpec& target,
                              const ControllerConfig& cfg, bool eclipsed, double mu);

}  // namespace qlaw

#endif  // QLAW_GUIDANCE_HPP
