#include "portal/kinematics.hpp"

#include <set>
#include <string>

namespace portal {

void KinematicsParams::validate() const {
  if (alpha <= 0) throw std::invalid_argument("alpha must be positive");
  if (epsilon <= 0) throw std::invalid_argument("epsilon must be positive");
  if (v_h < 0) throw std::invalid_argument("v_h must be nonnegative");
  if (h() <= 0) throw std::invalid_argument("launch height must be positive");
}

FreeFall free_fall(const Rational& s, const KinematicsParams& params) {
  if (s < 0) throw NegativeDistance("fall distance " + to_string(s) + " is negative");
  FreeFall f;
  f.v_f_sq = 2 * params.alpha * s;
  f.t_fall_sq = 2 * s / params.alpha;
  f.d_sq = landing_distance_sq(f.v_f_sq, params);
  return f;
}

Rational landing_distance_sq(const Rational& v_x_sq, const KinematicsParams& params) {
  return v_x_sq * (2 * params.h() / params.alpha);
}

bool within_sqrt_distance(const Rational& x, const Rational& y, const Rational& w) {
  const Rational w2 = w * w;
  // sqrt(x) <= sqrt(y) + w  <=>  x - y - w^2 <= 2 w sqrt(y)
  const Rational upper = x - y - w2;
  if (upper > 0 && upper * upper > 4 * w2 * y) return false;
  // sqrt(x) >= sqrt(y) - w: trivially true once sqrt(y) <= w; otherwise
  // y + w^2 - x <= 2 w sqrt(y)
  if (y <= w2) return true;
  const Rational lower = y + w2 - x;
  return lower <= 0 || lower * lower <= 4 * w2 * y;
}

Rational total_fall(const Geometry& geom, const std::vector<std::size_t>& chosen) {
  Rational s = 0;
  for (std::size_t i : chosen) s += geom.wells.at(i).depth + geom.step_drop;
  return s;
}

Landing landing_for_fall(const Rational& s, const KinematicsParams& params, const Geometry& geom) {
  const Rational d_sq = free_fall(s, params).d_sq;
  if (within_sqrt_distance(d_sq, geom.d_target_sq, geom.half_width)) return Hit{};
  return Miss{d_sq - geom.d_target_sq};
}

Landing verify_selection(const SubsetSumInstance& inst, const std::vector<std::size_t>& chosen,
                         const KinematicsParams& params, const Geometry& geom) {
  std::set<std::size_t> distinct;
  for (std::size_t i : chosen) {
    if (i >= inst.n() || i >= geom.wells.size())
      throw IndexError("well index " + std::to_string(i) + " out of range");
    if (!distinct.insert(i).second) throw IndexError("well index " + std::to_string(i) + " repeated");
  }
  return landing_for_fall(total_fall(geom, chosen), params, geom);
}

}  // namespace portal
