#ifndef QLAW_SCENARIO_IO_HPP
#define QLAW_SCENARIO_IO_HPP

#include <string>

#include <nlohmann/json_fwd.hpp>

#include "qlaw/propagator.hpp"

namespace qlaw {

/**
 * Scenario JSON schema (angles in degrees at this boundary, radians inside):
 *
 *   spacecraft:    mass_kg, thrust_N, isp_s
 *   initial_orbit: a_km, e, i_deg, raan_deg, argp_deg, theta_deg
 *   target:        a_km?, e?, i_deg?, raan_deg?, argp_deg?, tolerances{...}
 *   controller:    law ("classic"|"modified"), weights{a,e,i,raan,argp},
 *                  hyperparameters{m,n,r_exp,k,b,w_p,penalty,
 *                                  penalty_modified,zeta,delta_e,rp_min_km},
 *                  eta_threshold, n_theta, eclipse_coast
 *   dynamics:      j2, third_body, srp, epoch_sun_lon_deg, max_days
 *   integrator:    step_s, record_every
 *
 * Unknown keys are rejected (the error names the key); missing optional keys
 * take the documented defaults; omitted target elements are free.
 */
Scenario scenario_from_json(const nlohmann::json& doc);

Scenario load_scenario_file(const std::string& path);

/// Full resolved echo of a scenario: every default made explicit, degrees at
/// the boundary. Feeding the result back reproduces the identical run.
nlohmann::json scenario_to_json(const Scenario& scn);

}  // namespace qlaw

#endif  // QLAW_SCENARIO_IO_HPP
