#ifndef QLAW_PROPAGATOR_HPP
#define QLAW_PROPAGATOR_HPP

#include <string>
#include <vector>

#include "qlaw/guidance.hpp"

namespace qlaw {

struct IntegratorSettings {
    double step_s = 60.0;   // fixed RK4 step [s]
    int record_every = 1;   // trajectory sampling stride in steps

    void validate() const;
};

/// Everything one closed-loop run needs.
struct Scenario {
    OrbitalElements initial;
    TargetSpec target;
    SpacecraftParams spacecraft;
    ControllerConfig controller;
    PerturbationToggles perturbations;
    double sun_lon0 = 0.0;      // sun ecliptic longitude at t = 0 [rad]
    double max_days = 365.0;
    IntegratorSettings integrator;
    PhysicalConstants constants;

    void validate() const;
};

/// One recorded sample of the closed-loop run.
struct TrajectoryRow {
    double t = 0.0;        // [s]
    double a = 0.0;        // [km]
    double e = 0.0;
    double i = 0.0;        // [rad]
    double raan = 0.0;     // [rad]
    double argp = 0.0;     // [rad]
    double theta = 0.0;    // [rad], wrapped
    double mass = 0.0;     // [kg]
    bool thrust_on = false;
    double alpha = 0.0;    // [rad]
    double beta = 0.0;     // [rad]
    double value = 0.0;    // Lyapunov value [s^2]
    double vdot = 0.0;     // law derivative [s^2/s]
    double eta_r = 1.0;
    bool eclipse = false;
    double rp = 0.0;       // periapsis radius [km]
};

struct Trajectory {
    std::vector<TrajectoryRow> rows;
};

enum class Termination {
    Converged,
    MaxDuration,
    PeriapsisViolation,
    MassFloor,
    EccentricityUnbound,
    IntegrationFault
};

const char* to_string(Termination t);

struct RunSummary {
    bool converged = false;
    double transfer_time_days = 0.0;
    double propellant_kg = 0.0;
    double revolutions = 0.0;
    double min_periapsis_km = 0.0;
    double max_semi_major_axis_km = 0.0;
    double thrust_on_fraction = 0.0;
    Termination termination = Termination::MaxDuration;
    OrbitalElements final_elements;
    double final_mass_kg = 0.0;
};

struct PropagateResult {
    Trajectory trajectory;
    RunSummary summary;
};

/**
 * Closed-loop propagation: fixed-step RK4 over (Z, theta, mass) with a
 * guidance decision at every step, eclipse detection, and failure events
 * (periapsis below r_earth + 100 km, mass floor, e -> 1, non-finite state).
 * With record = false only the summary is produced.
 */
PropagateResult propagate(const Scenario& scn, bool record = true);

/// Control acceleration the propagator applies for a command [km/s^2].
RtnAcceleration control_acceleration(const GuidanceCommand& cmd, const SpacecraftParams& sc,
                                     double mass);

using State7 = Eigen::Matrix<double, 7, 1>;  // (a, e, i, raan, argp, theta, mass)

/// One classical fourth-order Runge-Kutta advance.
template <typename Rates>
State7 integrate_step(const State7& y, Rates&& rates, double h) {
    const State7 k1 = rates(y);
    const State7 k2 = rates(y + 0.5 * h * k1);
    const State7 k3 = rates(y + 0.5 * h * k2);
    const State7 k4 = rates(y + h * k3);
    return y + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

}  // namespace qlaw

#endif  // QLAW_PROPAGATOR_HPP
