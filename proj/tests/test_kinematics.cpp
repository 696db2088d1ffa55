#include <doctest.h>

#include "portal/compilers.hpp"
#include "portal/kinematics.hpp"

#include <random>

using namespace portal;

TEST_CASE("free fall") {
  KinematicsParams p;
  p.alpha = 2;
  CHECK(free_fall(1, p).v_f_sq == 4);
  p.alpha = 1;
  CHECK(free_fall(2, p).t_fall_sq == 4);
  p.launch_height = Rational(1);
  CHECK(free_fall(100, p).d_sq == 400);
  p.alpha = Rational(7, 3);
  CHECK(free_fall(100, p).d_sq == 400);
  CHECK_THROWS_AS(free_fall(-1, p), NegativeDistance);
}

TEST_CASE("rational text") {
  CHECK(to_string(Rational(6, 4)) == "3/2");
  CHECK(to_string(Rational(5)) == "5/1");
  CHECK(parse_rational("-3/6") == Rational(-1, 2));
  CHECK(parse_rational("7") == 7);
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
}

TEST_CASE("interval test without roots") {
  // |sqrt(x) - sqrt(y)| <= w compared against integer squares
  for (int a = 0; a <= 12; ++a)
    for (int c = 0; c <= 12; ++c)
      for (int w = 0; w <= 4; ++w) {
        CAPTURE(a);
        CAPTURE(c);
        CAPTURE(w);
        CHECK(within_sqrt_distance(a * a, c * c, w) == (std::abs(a - c) <= w));
      }
  CHECK(within_sqrt_distance(2, 2, 0));
  CHECK_FALSE(within_sqrt_distance(2, 3, Rational(1, 4)));  // 0.318
  CHECK(within_sqrt_distance(2, 3, Rational(1, 3)));        // 0.318 < 0.333
}

TEST_CASE("verify selection") {
  KinematicsParams p;
  p.epsilon = 8;
  const SubsetSumInstance inst{{1, 2, 3}, 3};
  const Geometry g = compile_subset_sum(inst, p).geometry;
  CHECK(g.d_target_sq == 82944);
  CHECK(total_fall(g, {0, 1}) == 2592);
  CHECK(std::holds_alternative<Hit>(verify_selection(inst, {0, 1}, p, g)));
  CHECK(std::holds_alternative<Hit>(verify_selection(inst, {2}, p, g)));
  auto miss = verify_selection(inst, {0}, p, g);
  REQUIRE(std::holds_alternative<Miss>(miss));
  CHECK(std::get<Miss>(miss).squared_offset == 27648 - 82944);
  CHECK_THROWS_AS(verify_selection(inst, {3}, p, g), IndexError);
  CHECK_THROWS_AS(verify_selection(inst, {1, 1}, p, g), IndexError);
}

TEST_CASE("geometry invariants") {
  KinematicsParams p;
  p.epsilon = Rational(3, 2);
  p.v_h = 5;
  p.alpha = Rational(1, 7);
  const SubsetSumInstance inst{{2, 3, 4}, 7};
  const Geometry g = compile_subset_sum(inst, p).geometry;
  const Rational eps = p.epsilon;
  CHECK(g.delta == 2 * 9 * eps * 7);
  CHECK(g.half_width == 3 * eps / 2);
  CHECK(g.d_nominal == 2 * 7 * 3 * eps);
  CHECK(g.separation > 2 * p.v_h * 3 * eps);
  for (const Well& w : g.wells) CHECK(w.depth == 4 * inst.values[w.index] * 9 * eps * 7);
  const Rational t_sq = free_fall(total_fall(g, {0, 1, 2}), p).t_fall_sq;
  CHECK(p.v_h * p.v_h * t_sq < g.separation * g.separation);
}
