#include "copa/geometry.hpp"

#include <cmath>
#include <sstream>

namespace copa {

bool validate_coprime(int p, int q) {
  if (p < 1 || q < 1) throw std::invalid_argument("coprime: P and Q must be positive integers");
  return std::gcd(p, q) == 1;
}

void CoprimeSpec::validate() const {
  if (p < 1) throw std::invalid_argument("coprime.p: must be >= 1");
  if (q < 1) throw std::invalid_argument("coprime.q: must be >= 1");
  if (!validate_coprime(p, q)) {
    std::ostringstream os;
    os << "coprime.p/q: gcd(" << p << ", " << q << ") != 1, P and Q must be co-prime";
    throw std::invalid_argument(os.str());
  }
  if (!(dx_wl > 0.0)) throw std::invalid_argument("coprime.dx_wl: must be > 0");
  if (!(wavelength_um > 0.0)) throw std::invalid_argument("coprime.wavelength_um: must be > 0");
  if (k1.num <= 0) throw std::invalid_argument("coprime.k1: must be positive");
  if (k2.num <= 0) throw std::invalid_argument("coprime.k2: must be positive");
  if (!(k1 * q).is_integer()) {
    throw std::invalid_argument("coprime.k1: k1*Q = " + (k1 * q).str() +
                                " is not an integer element count");
  }
  if (!(k2 * p).is_integer()) {
    throw std::invalid_argument("coprime.k2: k2*P = " + (k2 * p).str() +
                                " is not an integer element count");
  }
}

void RoutingModel::validate() const {
  if (!(element_size_um > 0.0)) throw std::invalid_argument("routing: element size must be > 0");
  if (!(waveguide_pitch_um > 0.0))
    throw std::invalid_argument("routing: waveguide pitch must be > 0");
  if (layers < 1) throw std::invalid_argument("routing: layers must be >= 1");
}

ArrayGeometry make_uniform_grid(Index nx, Index ny, double pitch_wl, ApertureRole role,
                                const ElementPattern& element, double min_spacing_wl) {
  if (nx < 1 || ny < 1) throw std::invalid_argument("grid: dimensions must be >= 1");
  if (!(pitch_wl > 0.0)) throw std::invalid_argument("grid: pitch must be > 0");
  if ((nx > 1 || ny > 1) && pitch_wl < min_spacing_wl) {
    std::ostringstream os;
    os << "grid: pitch " << pitch_wl << " wl violates minimum element spacing " << min_spacing_wl
       << " wl";
    throw std::invalid_argument(os.str());
  }
  ArrayGeometry g;
  g.role = role;
  g.element = element;
  g.nx = nx;
  g.ny = ny;
  g.positions_wl.resize(nx * ny, 2);
  const double cx = (nx - 1) / 2.0;
  const double cy = (ny - 1) / 2.0;
  for (Index ix = 0; ix < nx; ++ix) {
    for (Index iy = 0; iy < ny; ++iy) {
      g.positions_wl(ix * ny + iy, 0) = (ix - cx) * pitch_wl;
      g.positions_wl(ix * ny + iy, 1) = (iy - cy) * pitch_wl;
    }
  }
  return g;
}

std::pair<ArrayGeometry, ArrayGeometry> make_coprime_pair(const CoprimeSpec& spec,
                                                          const ElementPattern& element) {
  spec.validate();
  const Index n_tx = spec.tx_per_axis();
  const Index n_rx = spec.rx_per_axis();
  ArrayGeometry tx = make_uniform_grid(n_tx, n_tx, spec.tx_pitch_wl(), ApertureRole::transmitter,
                                       element);
  ArrayGeometry rx = make_uniform_grid(n_rx, n_rx, spec.rx_pitch_wl(), ApertureRole::receiver,
                                       element);
  return {std::move(tx), std::move(rx)};
}

std::optional<double> grating_lobe_spacing(double pitch_wl) {
  if (!(pitch_wl > 0.0)) throw std::invalid_argument("grating lobe spacing: pitch must be > 0");
  if (pitch_wl < 1.0) return std::nullopt;  // asin argument exceeds 1
  return rad2deg(std::asin(1.0 / pitch_wl));
}

double routing_limited_pitch(int n_per_axis, const RoutingModel& model) {
  if (n_per_axis < 1) throw std::invalid_argument("routing pitch: n must be >= 1");
  model.validate();
  // A single row routes directly; otherwise the worst inter-row gap must
  // pass floor(n/layers) waveguides.
  const long transit = n_per_axis == 1 ? 0 : n_per_axis / model.layers;
  const double routed = model.element_size_um + transit * model.waveguide_pitch_um;
  return std::max(model.element_size_um, routed);
}

}  // namespace copa
