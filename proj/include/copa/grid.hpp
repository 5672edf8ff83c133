#ifndef COPA_GRID_HPP
#define COPA_GRID_HPP

#include "copa/types.hpp"

namespace copa {

/// Sampled direction space: u = sin(theta_x), v = sin(theta_y), both
/// strictly increasing in [-1, 1]. A point is visible iff u^2 + v^2 <= 1.
struct DirectionGrid {
  VecXd u;
  VecXd v;

  static DirectionGrid uniform(Index n) { return uniform(n, n); }
  static DirectionGrid uniform(Index nu, Index nv);

  Index nu() const { return u.size(); }
  Index nv() const { return v.size(); }
  bool visible(Index iu, Index iv) const { return u[iu] * u[iu] + v[iv] * v[iv] <= 1.0; }

  Index nearest_u(double value) const;
  Index nearest_v(double value) const;

  bool same_as(const DirectionGrid& o) const {
    return u.size() == o.u.size() && v.size() == o.v.size() && (u == o.u).all() && (v == o.v).all();
  }

  void validate() const;
};

}  // namespace copa

#endif
