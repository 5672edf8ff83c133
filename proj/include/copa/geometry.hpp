#ifndef COPA_GEOMETRY_HPP
#define COPA_GEOMETRY_HPP

#include "copa/element.hpp"
#include "copa/types.hpp"

#include <optional>
#include <utility>

namespace copa {

enum class ApertureRole { transmitter, receiver };

/// Co-prime transceiver design tuple. Pitches derive as d_tx = P*dx and
/// d_rx = Q*dx; element counts per axis as n_tx = k1*Q and n_rx = k2*P.
struct CoprimeSpec {
  int p = 3;
  int q = 4;
  double dx_wl = 2.0;          // base pitch, wavelengths
  Rational k1{2};
  Rational k2{8, 3};
  double wavelength_um = 1.55;

  double tx_pitch_wl() const { return p * dx_wl; }
  double rx_pitch_wl() const { return q * dx_wl; }
  int tx_per_axis() const { return static_cast<int>((k1 * q).integer()); }
  int rx_per_axis() const { return static_cast<int>((k2 * p).integer()); }

  /// Throws std::invalid_argument naming the offending field.
  void validate() const;
};

/// Element positions of one aperture, in wavelength units, plus the
/// element pattern they radiate with. Uniform-grid construction keeps the
/// (nx, ny) dims for row/column addressing; imported point sets have none.
struct ArrayGeometry {
  Eigen::ArrayX2d positions_wl;
  ApertureRole role = ApertureRole::transmitter;
  ElementPattern element;
  Index nx = 0;
  Index ny = 0;

  Index count() const { return positions_wl.rows(); }
};

/// Routing-limited-pitch model constants (planar photonic routing).
struct RoutingModel {
  double element_size_um = 2.0;
  double waveguide_pitch_um = 1.0;
  int layers = 1;

  void validate() const;
};

bool validate_coprime(int p, int q);

/// Rectangular lattice of nx*ny elements centered at the origin,
/// row-major ordering (outer index x, inner index y).
ArrayGeometry make_uniform_grid(Index nx, Index ny, double pitch_wl,
                                ApertureRole role = ApertureRole::transmitter,
                                const ElementPattern& element = ElementPattern{},
                                double min_spacing_wl = 0.5);

std::pair<ArrayGeometry, ArrayGeometry> make_coprime_pair(
    const CoprimeSpec& spec, const ElementPattern& element = ElementPattern{});

/// Eq.-style grating-lobe spacing asin(1/pitch) in degrees; empty when the
/// pitch is below one wavelength (no grating lobes in visible space).
std::optional<double> grating_lobe_spacing(double pitch_wl);

/// Pitch in micrometers forced by planar routing: a single row routes
/// directly; otherwise the worst inter-row gap carries floor(n/layers)
/// pass-through waveguides. Declared model, not fitted.
double routing_limited_pitch(int n_per_axis, const RoutingModel& model);

}  // namespace copa

#endif
