#pragma once

// Exact free-fall and launch arithmetic. Everything is rational; lengths that
// would need a square root are carried squared.

#include "portal/instances.hpp"
#include "portal/rational.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <variant>
#include <vector>

namespace portal {

struct KinematicsParams {
  Rational alpha = 1;    // gravitational acceleration, distance / tick^2
  Rational v_h = 0;      // horizontal drift speed while falling
  Rational epsilon = 1;  // expansion factor
  std::optional<Rational> launch_height;  // defaults to epsilon

  Rational h() const { return launch_height ? *launch_height : epsilon; }
  // Throws std::invalid_argument unless alpha > 0, epsilon > 0, v_h >= 0, h > 0.
  void validate() const;
};

struct NegativeDistance : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct IndexError : std::out_of_range {
  using std::out_of_range::out_of_range;
};

struct FreeFall {
  Rational v_f_sq;     // 2 alpha s
  Rational t_fall_sq;  // 2 s / alpha
  Rational d_sq;       // v_f^2 * 2h / alpha, which is 4 s h
};

FreeFall free_fall(const Rational& s, const KinematicsParams& params);

// Same quantity as free_fall(s).d_sq but from the launch-speed side:
// V_x^2 * 2h / alpha.
Rational landing_distance_sq(const Rational& v_x_sq, const KinematicsParams& params);

// |sqrt(x) - sqrt(y)| <= w for x, y, w >= 0, decided without roots.
bool within_sqrt_distance(const Rational& x, const Rational& y, const Rational& w);

struct Well {
  std::size_t index = 0;
  Rational depth;
  Rational floor_x;
  Rational ceiling_x;
  Rational ceiling_y;
};

struct Geometry {
  std::vector<Well> wells;
  Rational delta;           // stair step height
  Rational step_drop;       // vertical distance picked up per step actually traversed
  Rational h;               // launch portal height above the platform
  Rational d_target_sq;     // exact landing distance squared for a sum of t
  Rational d_nominal;       // the closed form 2 t n epsilon, kept for reference
  Rational half_width;      // n epsilon / 2
  Rational separation;      // s_min between adjacent wells
  Rational depth_unit;      // depth per unit of a_i
};

struct Hit {};
struct Miss {
  Rational squared_offset;  // d^2 - d_target^2
};
using Landing = std::variant<Hit, Miss>;

// Total fall distance for the chosen wells, including stair steps.
Rational total_fall(const Geometry& geom, const std::vector<std::size_t>& chosen);

// Landing test for an arbitrary total fall S.
Landing landing_for_fall(const Rational& s, const KinematicsParams& params, const Geometry& geom);

// Throws IndexError on out-of-range or repeated indices.
Landing verify_selection(const SubsetSumInstance& inst, const std::vector<std::size_t>& chosen,
                         const KinematicsParams& params, const Geometry& geom);

}  // namespace portal
