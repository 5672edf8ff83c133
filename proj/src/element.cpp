#include "copa/element.hpp"

namespace copa {

namespace {
constexpr double kLn2 = 0.6931471805599453;

double gauss_amp_1d(double theta_deg, double width_3db_deg, double center_deg) {
  const double t = 2.0 * (theta_deg - center_deg) / width_3db_deg;
  return std::exp(-0.5 * kLn2 * t * t);  // sqrt of the power profile
}
}  // namespace

double element_amplitude(const ElementPattern& p, double theta_x_deg, double theta_y_deg) {
  if (std::abs(theta_x_deg) > 90.0 || std::abs(theta_y_deg) > 90.0)
    throw std::invalid_argument("element: angles must be within +-90 degrees");
  if (p.kind == ElementKind::isotropic) return 1.0;
  return gauss_amp_1d(theta_x_deg, p.theta_x_3db_deg, 0.0) *
         gauss_amp_1d(theta_y_deg, p.theta_y_3db_deg, p.tilt_y_deg);
}

VecXd element_amp_factor_u(const ElementPattern& p, const VecXd& u) {
  if (p.kind == ElementKind::isotropic) return VecXd::Ones(u.size());
  VecXd out(u.size());
  for (Index i = 0; i < u.size(); ++i)
    out[i] = gauss_amp_1d(deg_from_dircos(u[i]), p.theta_x_3db_deg, 0.0);
  return out;
}

VecXd element_amp_factor_v(const ElementPattern& p, const VecXd& v) {
  if (p.kind == ElementKind::isotropic) return VecXd::Ones(v.size());
  VecXd out(v.size());
  for (Index i = 0; i < v.size(); ++i)
    out[i] = gauss_amp_1d(deg_from_dircos(v[i]), p.theta_y_3db_deg, p.tilt_y_deg);
  return out;
}

}  // namespace copa
