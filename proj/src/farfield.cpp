#include "copa/farfield.hpp"

#include <cmath>
#include <limits>

namespace copa {

namespace {
constexpr double kNegInf = -std::numeric_limits<double>::infinity();

MatXcd phase_matrix(const VecXd& coord, const VecXd& samples, const VecXd* phase_offset) {
  // rows: elements, cols: samples; entry exp(i(2pi x s + phi))
  MatXd arg = (two_pi * coord.matrix() * samples.matrix().transpose()).array();
  if (phase_offset) arg.colwise() += *phase_offset;
  MatXcd out(arg.rows(), arg.cols());
  for (Index j = 0; j < arg.cols(); ++j)
    for (Index i = 0; i < arg.rows(); ++i) out(i, j) = std::polar(1.0, arg(i, j));
  return out;
}

/// Zero the non-visible tails of each u-row; v is monotone so the visible
/// span per row is one contiguous index range.
template <typename Derived>
void mask_invisible(const DirectionGrid& grid, Eigen::MatrixBase<Derived>& values,
                    const typename Derived::Scalar& fill) {
  const Index nv = grid.nv();
  for (Index iu = 0; iu < grid.nu(); ++iu) {
    const double lim2 = 1.0 - grid.u[iu] * grid.u[iu];
    Index lo = 0;
    while (lo < nv && grid.v[lo] * grid.v[lo] > lim2) ++lo;
    Index hi = nv;
    while (hi > lo && grid.v[hi - 1] * grid.v[hi - 1] > lim2) --hi;
    if (lo > 0) values.row(iu).segment(0, lo).setConstant(fill);
    if (hi < nv) values.row(iu).segment(hi, nv - hi).setConstant(fill);
  }
}
}  // namespace

PhaseMap PhaseMap::reduced(const VecXd& raw) {
  PhaseMap m;
  m.phase_rad = raw;
  for (Index i = 0; i < m.phase_rad.size(); ++i) {
    double p = std::fmod(m.phase_rad[i], two_pi);
    if (p < 0.0) p += two_pi;
    if (p >= two_pi) p = 0.0;  // fmod rounding at the seam
    m.phase_rad[i] = p;
  }
  return m;
}

FieldPattern array_factor(const ArrayGeometry& geometry, const PhaseMap& phases,
                          const DirectionGrid& grid) {
  if (phases.size() != geometry.count())
    throw std::invalid_argument("array factor: phase map length != element count");
  grid.validate();

  const VecXd x = geometry.positions_wl.col(0);
  const VecXd y = geometry.positions_wl.col(1);
  const MatXcd a = phase_matrix(x, grid.u, &phases.phase_rad);
  const MatXcd b = phase_matrix(y, grid.v, nullptr);

  FieldPattern field;
  field.grid = grid;
  field.values.noalias() = a.transpose() * b;
  mask_invisible(grid, field.values, std::complex<double>(0.0, 0.0));
  return field;
}

PowerPattern power_pattern(const FieldPattern& field, const ElementPattern& element) {
  const DirectionGrid& grid = field.grid;
  const VecXd eu = element_amp_factor_u(element, grid.u);
  const VecXd ev = element_amp_factor_v(element, grid.v);

  MatXd power = field.values.cwiseAbs2();
  power.array().colwise() *= eu.square();
  power.array().rowwise() *= ev.square().transpose();

  double peak = 0.0;
  for (Index iu = 0; iu < grid.nu(); ++iu)
    for (Index iv = 0; iv < grid.nv(); ++iv)
      if (grid.visible(iu, iv)) peak = std::max(peak, power(iu, iv));
  if (!(peak > 0.0))
    throw std::invalid_argument("power pattern: all-zero field, cannot normalize");

  PowerPattern out;
  out.grid = grid;
  out.db = (power.array() / peak).log10() * 10.0;
  for (Index iu = 0; iu < grid.nu(); ++iu)
    for (Index iv = 0; iv < grid.nv(); ++iv)
      if (!(power(iu, iv) > 0.0)) out.db(iu, iv) = kNegInf;
  mask_invisible(grid, out.db, kNegInf);
  return out;
}

PowerPattern aperture_power(const ArrayGeometry& geometry, const PhaseMap& phases,
                            const DirectionGrid& grid) {
  return power_pattern(array_factor(geometry, phases, grid), geometry.element);
}

PowerPattern transceiver_pattern(const PowerPattern& tx, const PowerPattern& rx) {
  if (!tx.grid.same_as(rx.grid))
    throw std::invalid_argument("transceiver pattern: direction grids differ");
  PowerPattern out;
  out.grid = tx.grid;
  out.db = tx.db + rx.db;  // product in linear power; rho fixed at 1
  double peak = kNegInf;
  for (Index iu = 0; iu < out.grid.nu(); ++iu)
    for (Index iv = 0; iv < out.grid.nv(); ++iv)
      if (std::isfinite(out.db(iu, iv))) peak = std::max(peak, out.db(iu, iv));
  if (!std::isfinite(peak))
    throw std::invalid_argument("transceiver pattern: product has no finite power");
  out.db.array() -= peak;
  return out;
}

CrossSection cross_section(const PowerPattern& pattern, Axis axis, double at) {
  const DirectionGrid& grid = pattern.grid;
  CrossSection cs;
  if (axis == Axis::u) {
    if (at < grid.v[0] || at > grid.v[grid.nv() - 1])
      throw std::invalid_argument("cross section: slice coordinate outside grid range");
    const Index iv = grid.nearest_v(at);
    cs.theta_deg.resize(grid.nu());
    cs.db = pattern.db.col(iv);
    for (Index i = 0; i < grid.nu(); ++i) cs.theta_deg[i] = deg_from_dircos(grid.u[i]);
  } else {
    if (at < grid.u[0] || at > grid.u[grid.nu() - 1])
      throw std::invalid_argument("cross section: slice coordinate outside grid range");
    const Index iu = grid.nearest_u(at);
    cs.theta_deg.resize(grid.nv());
    cs.db = pattern.db.row(iu);
    for (Index i = 0; i < grid.nv(); ++i) cs.theta_deg[i] = deg_from_dircos(grid.v[i]);
  }
  return cs;
}

}  // namespace copa
