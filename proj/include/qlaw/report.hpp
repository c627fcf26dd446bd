#ifndef QLAW_REPORT_HPP
#define QLAW_REPORT_HPP

#include <string>

#include "qlaw/propagator.hpp"

namespace qlaw {

/// Stable trajectory CSV header (degrees for angles, one row per sample):
/// t_s,a_km,e,i_deg,raan_deg,argp_deg,theta_deg,mass_kg,thrust_on,
/// alpha_deg,beta_deg,V_s2,Vdot_s2ps,eta_r,eclipse,rp_km
extern const char* kTrajectoryCsvHeader;

void write_trajectory_csv(const std::string& path, const Trajectory& traj);
Trajectory read_trajectory_csv(const std::string& path);

/// summary.json: run summary plus the full resolved scenario echo.
void write_summary_json(const std::string& path, const RunSummary& summary, const Scenario& scn);

/// Diagnostic SVG plots under `dir`: element histories, Lyapunov value and
/// derivative, effectivity, and the equatorial-plane track normalized by the
/// Earth radius (eclipse arcs highlighted).
void write_report_svgs(const std::string& dir, const Trajectory& traj,
                       const PhysicalConstants& pc);

}  // namespace qlaw

#endif  // QLAW_REPORT_HPP
