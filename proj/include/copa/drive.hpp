#ifndef COPA_DRIVE_HPP
#define COPA_DRIVE_HPP

#include "copa/types.hpp"

#include <vector>

namespace copa {

/// Thermo-optic shifter constants and the column-cycling rate.
struct ThermalParams {
  double p_two_pi_mw = 21.2;   // electrical power for a 2pi shift
  double f3db_khz = 19.0;      // thermal low-pass corner
  double cycle_rate_mhz = 4.0; // full column cycle frequency

  double tau_s() const { return 1.0 / (two_pi * f3db_khz * 1e3); }
  double cycle_period_s() const { return 1.0 / (cycle_rate_mhz * 1e6); }
  /// Cycling must sit far above the thermal corner for duty-cycle
  /// averaging to hold; below 10x is a warning, not an error.
  bool averaging_ratio_ok() const { return cycle_rate_mhz * 1e6 / (f3db_khz * 1e3) >= 10.0; }

  void validate() const;
};

/// Row-column PAM schedule for an n x n shifter grid: row r receives
/// amplitude_mw(r, c) during column c's slot (duty 1/n), plus a shared
/// dummy-heater power per slot that flattens the aggregate load.
struct DriveSchedule {
  Index n = 0;
  double slot_s = 0.0;        // 1 / (cycle rate * n)
  MatXd amplitude_mw;         // n x n
  VecXd dummy_mw;             // per slot
};

/// Simulated thermo-optic response, sampled at slot boundaries (the
/// extrema of a first-order response to piecewise-constant drive).
struct ShifterTrace {
  Index n = 0;
  int cycles = 0;
  int samples_per_slot = 1;
  double dt_s = 0.0;
  VecXd time_s;               // sample count = cycles*n*samples_per_slot + 1
  MatXd phase_rad;            // samples x n^2, shifter index = row*n + col
  VecXd target_phase_rad;     // n^2
  MatXd cycle_mean_phase_rad; // cycles x n^2, exact per-cycle integral mean
};

struct RippleStat {
  Index row = 0;
  Index col = 0;
  double mean_error_rad = 0.0;
  double ripple_rad = 0.0;     // peak to peak
};

/// 2n+1 drivers address n^2 shifters (the +1 drives the dummy heaters).
int driver_count(int n);

/// Target average power per shifter is (phi/2pi)*p_two_pi; the slot
/// amplitude is n times that so the duty-1/n average lands on target.
DriveSchedule schedule_from_phases(const MatXd& phases_rad, const ThermalParams& params);

/// First-order thermal state dP/dt = (P_in - P)/tau integrated in closed
/// form per slot (no ODE solver error); phase = 2pi * P / p_two_pi.
ShifterTrace simulate_thermal(const DriveSchedule& schedule, const ThermalParams& params,
                              int cycles, int samples_per_slot = 1);

/// Statistics over the last full cycle after discarding settle_cycles.
std::vector<RippleStat> phase_ripple(const ShifterTrace& trace, int settle_cycles);

}  // namespace copa

#endif
