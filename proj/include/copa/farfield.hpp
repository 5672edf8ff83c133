#ifndef COPA_FARFIELD_HPP
#define COPA_FARFIELD_HPP

#include "copa/geometry.hpp"
#include "copa/grid.hpp"

namespace copa {

/// Per-element phase settings, radians, reduced to [0, 2pi), ordered like
/// the owning geometry's positions.
struct PhaseMap {
  VecXd phase_rad;

  static PhaseMap reduced(const VecXd& raw);
  Index size() const { return phase_rad.size(); }
};

/// Complex array factor over a direction grid; zero outside visible space.
/// values(iu, iv) = sum_n exp(i [2pi (x_n u + y_n v) + phi_n]).
struct FieldPattern {
  DirectionGrid grid;
  MatXcd values;  // nu x nv
};

/// Peak-normalized power in dB over the grid; -inf outside visible space
/// and at exact nulls. The max over visible points is 0 dB exactly.
struct PowerPattern {
  DirectionGrid grid;
  MatXd db;  // nu x nv
};

enum class Axis { u, v };

/// One pattern cut: angle in degrees against power in dB, sorted by angle.
struct CrossSection {
  VecXd theta_deg;
  VecXd db;
};

/// Direct summation over elements (the only evaluation path; no FFT).
FieldPattern array_factor(const ArrayGeometry& geometry, const PhaseMap& phases,
                          const DirectionGrid& grid);

/// |field * element_amplitude|^2 in dB, peak-normalized over visible points.
PowerPattern power_pattern(const FieldPattern& field, const ElementPattern& element);

/// One-shot helper: steering-independent of element handling above.
PowerPattern aperture_power(const ArrayGeometry& geometry, const PhaseMap& phases,
                            const DirectionGrid& grid);

/// Eq.(product) transceiver synthesis: per-point dB sum (linear product),
/// target reflectivity fixed at 1, re-normalized to 0 dB peak.
/// Grids must be identical; no implicit resampling.
PowerPattern transceiver_pattern(const PowerPattern& tx, const PowerPattern& rx);

/// Nearest-row cut at the fixed other-coordinate, converted to degrees.
CrossSection cross_section(const PowerPattern& pattern, Axis axis, double at);

}  // namespace copa

#endif
