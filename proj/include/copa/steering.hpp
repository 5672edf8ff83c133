#ifndef COPA_STEERING_HPP
#define COPA_STEERING_HPP

#include "copa/farfield.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace copa {

/// A commanded beam direction in direction cosines, inside visible space.
struct SteerTarget {
  double u = 0.0;
  double v = 0.0;

  static SteerTarget from_degrees(double theta_x_deg, double theta_y_deg);
  void validate() const;
};

/// Progressive-phase steering: phi_n = -2pi (x_n u0 + y_n v0) mod 2pi.
PhaseMap steering_phases(const ArrayGeometry& geometry, const SteerTarget& target);

/// Both apertures steered onto the same pixel; the transceiver product
/// then peaks there.
std::pair<PhaseMap, PhaseMap> co_align(const ArrayGeometry& tx_geom, const ArrayGeometry& rx_geom,
                                       const SteerTarget& pixel);

/// Uniform angular lattice of floor(fov_x/bw) x floor(fov_y/bw) pixels,
/// centered on (center_theta_x, center_theta_y) in degrees; count equals
/// resolvable_spots. Empty when the beam exceeds the FOV.
std::vector<SteerTarget> pixel_grid(double fov_x_deg, double fov_y_deg, double beamwidth_deg,
                                    double center_theta_x_deg, double center_theta_y_deg);

struct OptimizerConfig {
  int max_sweeps = 10;
  int phase_steps = 64;       // discrete levels per element per sweep
  double noise_sigma = 0.0;   // relative power noise per measurement
  std::uint64_t seed = 1;

  void validate() const;
};

struct OptimizeResult {
  PhaseMap phases;
  /// Noise-free re-evaluated objective |AF(target)|^2 per sweep,
  /// entry 0 = the random initial state.
  std::vector<double> history;
};

/// Measurement-style coordinate ascent over a seeded random start: each
/// sweep visits elements in row-major order and keeps the best of
/// `phase_steps` evenly spaced trial phases by simulated detected power
/// (current setting retained unless strictly beaten). Deterministic for a
/// fixed seed; monotone for zero noise.
OptimizeResult optimize_phases(const ArrayGeometry& geometry, const SteerTarget& target,
                               const OptimizerConfig& config);

}  // namespace copa

#endif
