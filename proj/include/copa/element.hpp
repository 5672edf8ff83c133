#ifndef COPA_ELEMENT_HPP
#define COPA_ELEMENT_HPP

#include "copa/types.hpp"

namespace copa {

enum class ElementKind { isotropic, gaussian };

/// Parametric far-field pattern of a single radiating element.
///
/// The gaussian form is a separable power profile pinned to the 3 dB full
/// widths, with the peak offset by tilt_y_deg along theta_y:
///   power(tx, ty) = 2^-[(2 tx / wx)^2 + (2 (ty - tilt) / wy)^2]
struct ElementPattern {
  ElementKind kind = ElementKind::isotropic;
  double theta_x_3db_deg = 0.0;
  double theta_y_3db_deg = 0.0;
  double tilt_y_deg = 0.0;

  static ElementPattern make_isotropic() { return {}; }
  static ElementPattern make_gaussian(double wx_deg, double wy_deg, double tilt_deg) {
    if (!(wx_deg > 0.0) || !(wy_deg > 0.0))
      throw std::invalid_argument("element: gaussian beamwidths must be > 0");
    return {ElementKind::gaussian, wx_deg, wy_deg, tilt_deg};
  }

  bool operator==(const ElementPattern&) const = default;
};

/// Amplitude (sqrt of power) in [0,1] at a direction given in degrees.
double element_amplitude(const ElementPattern& p, double theta_x_deg, double theta_y_deg);

/// Separable amplitude factors over direction-cosine samples, so a full
/// pattern grid costs O(nu + nv) element evaluations. amp(iu,iv) = ax(iu)*ay(iv).
VecXd element_amp_factor_u(const ElementPattern& p, const VecXd& u);
VecXd element_amp_factor_v(const ElementPattern& p, const VecXd& v);

}  // namespace copa

#endif
