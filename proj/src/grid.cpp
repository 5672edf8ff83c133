#include "copa/grid.hpp"

namespace copa {

DirectionGrid DirectionGrid::uniform(Index nu, Index nv) {
  if (nu < 2 || nv < 2) throw std::invalid_argument("direction grid: need >= 2 samples per axis");
  DirectionGrid g;
  g.u = VecXd::LinSpaced(nu, -1.0, 1.0);
  g.v = VecXd::LinSpaced(nv, -1.0, 1.0);
  return g;
}

namespace {
Index nearest(const VecXd& samples, double value) {
  Index best = 0;
  (samples - value).abs().minCoeff(&best);
  return best;
}
}  // namespace

Index DirectionGrid::nearest_u(double value) const { return nearest(u, value); }
Index DirectionGrid::nearest_v(double value) const { return nearest(v, value); }

void DirectionGrid::validate() const {
  if (u.size() < 2 || v.size() < 2)
    throw std::invalid_argument("direction grid: need >= 2 samples per axis");
  for (const VecXd* s : {&u, &v}) {
    for (Index i = 1; i < s->size(); ++i)
      if (!((*s)[i] > (*s)[i - 1]))
        throw std::invalid_argument("direction grid: samples must be strictly increasing");
    if ((*s)[0] < -1.0 || (*s)[s->size() - 1] > 1.0)
      throw std::invalid_argument("direction grid: samples must lie in [-1, 1]");
  }
}

}  // namespace copa
