#include "portal/compilers.hpp"

#include <map>
#include <set>
#include <string>

namespace portal {

namespace {

std::string tag(std::size_t j, std::int64_t sigma) {
  return std::to_string(j) + "@" + std::to_string(sigma);
}

}  // namespace

SubsetSumLevel compile_subset_sum(const SubsetSumInstance& inst, const KinematicsParams& params) {
  inst.validate();
  params.validate();
  const std::size_t n = inst.n();
  const Rational eps = params.epsilon;
  // t = 0 or n = 0 would flatten every well; scale with max(., 1) instead.
  const Rational t_hat = std::max<std::int64_t>(inst.target, 1);
  const long long n_hat = std::max<long long>(static_cast<long long>(n), 1);
  const Rational n2 = Rational(n_hat * n_hat);

  Geometry geom;
  geom.depth_unit = 4 * n2 * eps * t_hat;
  geom.delta = 2 * n2 * eps * t_hat;
  geom.step_drop = 0;
  geom.h = params.h();
  geom.half_width = Rational(n_hat) * eps / 2;
  geom.d_nominal = 2 * Rational(inst.target) * Rational(static_cast<long long>(n)) * eps;
  const Rational target_fall = geom.depth_unit * inst.target;
  geom.d_target_sq = free_fall(target_fall, params).d_sq;

  const Rational max_fall = geom.depth_unit * inst.total() + geom.step_drop * static_cast<long long>(n);
  const Rational drift_t_sq = free_fall(max_fall, params).t_fall_sq;
  // v_h * sqrt(x) < v_h * (x + 1), so this clears the worst-case drift.
  geom.separation = 2 * params.v_h * static_cast<long long>(n) * eps + params.v_h * (drift_t_sq + 1) + eps;
  if (params.v_h * params.v_h * drift_t_sq >= geom.separation * geom.separation)
    throw std::logic_error("well separation does not clear horizontal drift");
  if (n > 0 && geom.step_drop * static_cast<long long>(n) >= geom.half_width)
    throw std::logic_error("accumulated stair steps exceed the platform half-width");

  for (std::size_t i = 0; i < n; ++i) {
    Well w;
    w.index = i;
    w.depth = geom.depth_unit * inst.values[i];
    w.floor_x = Rational(static_cast<long long>(i)) * (eps + geom.separation);
    w.ceiling_x = w.floor_x;
    w.ceiling_y = Rational(static_cast<long long>(n - i)) * geom.delta;
    geom.wells.push_back(std::move(w));
  }

  // Sums reachable before well j, and after it.
  std::vector<std::set<std::int64_t>> before(n + 1);
  before[0] = {0};
  for (std::size_t j = 0; j < n; ++j) {
    before[j + 1] = before[j];
    for (auto s : before[j]) before[j + 1].insert(s + inst.values[j]);
  }
  const std::set<std::int64_t>& all_sums = before[n];

  LevelBuilder b;
  const RoomId top = b.room("top");
  const RoomId platform = b.room("platform");
  const RoomId floor = b.room("floor");
  b.set_start(top);
  b.set_goal(platform);
  const ElementId top_floor = b.add(PortalSurface{top, {}});

  std::map<std::pair<std::size_t, std::int64_t>, RoomId> well_room;
  std::map<std::pair<std::size_t, std::int64_t>, ElementId> well_surface;
  for (std::size_t j = 0; j < n; ++j)
    for (auto sigma : before[j]) {
      const std::int64_t landed = sigma + inst.values[j];
      const RoomId ceil = b.room("ceil" + tag(j, sigma));
      const RoomId well = b.room("well" + tag(j, landed));
      well_room[{j, landed}] = well;
      well_surface[{j, landed}] = b.add(PortalSurface{well, {}});
      const PassageIndex drop = b.one_way(ceil, well);
      b.passage_at(drop).grill = true;
      // Ceiling j is seen from the top (nothing fallen yet) and from lower
      // indexed wells at the same accumulated sum.
      PortalSurface ceiling{ceil, {}};
      if (sigma == 0) ceiling.visible_from.insert(top);
      for (std::size_t i = 0; i < j; ++i)
        if (auto it = well_room.find({i, sigma}); it != well_room.end()) ceiling.visible_from.insert(it->second);
      b.add(std::move(ceiling));
    }

  for (auto sigma : all_sums) {
    const RoomId launch = b.room("launch@" + std::to_string(sigma));
    PortalSurface surface{launch, {}};
    if (sigma == 0) surface.visible_from.insert(top);
    for (std::size_t i = 0; i < n; ++i)
      if (auto it = well_room.find({i, sigma}); it != well_room.end()) surface.visible_from.insert(it->second);
    b.add(std::move(surface));

    const bool hit = std::holds_alternative<Hit>(landing_for_fall(geom.depth_unit * sigma, params, geom));
    b.one_way(launch, hit ? platform : floor);
  }

  // Only the target sum may land; neighbours must miss by more than the
  // platform half-width.
  const std::int64_t last = std::max(inst.total(), inst.target) + 1;
  for (std::int64_t sigma = 0; sigma <= last; ++sigma) {
    const bool hit = std::holds_alternative<Hit>(landing_for_fall(geom.depth_unit * sigma, params, geom));
    if (hit != (sigma == inst.target)) throw std::logic_error("landing separation failed at sum " + std::to_string(sigma));
  }
  (void)top_floor;
  return {std::move(b).build(), std::move(geom)};
}

}  // namespace portal
