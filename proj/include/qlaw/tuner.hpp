#ifndef QLAW_TUNER_HPP
#define QLAW_TUNER_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "qlaw/propagator.hpp"

namespace qlaw {

/// One tunable parameter. Recognized names: w_a, w_e, w_i, zeta.
struct SearchParam {
    std::string name;
    double lower = 0.01;
    double upper = 10.0;
    bool log_scale = true;

    void validate() const;
};

struct SearchSpace {
    std::vector<SearchParam> params;

    /// Default space: the three element weights in [0.01, 10], log-scaled,
    /// optionally plus the overshoot factor zeta in (1.05, 2.95) linear.
    static SearchSpace weights(bool include_zeta = false);

    void validate() const;
};

struct PsoParams {
    int swarm = 24;
    int iterations = 40;
    double inertia = 0.7;
    double cognitive = 1.5;
    double social = 1.5;
    double velocity_clamp = 0.3;  // in normalized [0,1] coordinates
    int threads = 0;              // 0 = hardware concurrency
};

struct PsoResult {
    std::vector<double> best_params;  // same order as the search space
    double best_objective = 0.0;      // [days] (penalized when unconverged)
    RunSummary best_summary;
    std::vector<std::pair<int, double>> history;  // (iteration, best objective)
};

/**
 * Global-best particle swarm over the search space, minimizing transfer
 * time; unconverged runs score max_days + 100 * normalized residual
 * distance. Particle 0 starts at the unit-weight incumbent, so the result
 * never loses to untuned gains. Deterministic for a fixed seed. Throws
 * Error if no particle ever converges.
 */
PsoResult pso_optimize(const Scenario& scn, const SearchSpace& space, const PsoParams& pso,
                       std::uint64_t seed);

/// Apply named parameter values to a scenario's controller (both laws share
/// the weight names).
void apply_params(Scenario& scn, const SearchSpace& space, const std::vector<double>& values);

struct ParetoPoint {
    double eta_threshold = 0.0;
    double time_days = 0.0;
    double propellant_kg = 0.0;
    std::vector<double> params;
    bool converged = false;
    bool on_front = false;  // survives non-dominated filtering
};

/**
 * One pso_optimize per effectivity threshold (same seed each), keeping
 * converged points; per-threshold failures are recorded as unconverged
 * points rather than raised. on_front marks the non-dominated subset in
 * (time, propellant).
 */
std::vector<ParetoPoint> pareto_sweep(const Scenario& scn, const std::vector<double>& thresholds,
                                      const SearchSpace& space, const PsoParams& pso,
                                      std::uint64_t seed);

}  // namespace qlaw

#endif  // QLAW_TUNER_HPP
