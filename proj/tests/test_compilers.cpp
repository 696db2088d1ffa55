#include <doctest.h>

#include "portal/compilers.hpp"
#include "portal/oracles.hpp"
#include "portal/solver.hpp"

using namespace portal;

namespace {

bool solvable(const Level& level) { return std::holds_alternative<Solvable>(solve(level)); }

GridGraph grid(std::vector<Point> pts) { return GridGraph{std::move(pts), 0}; }

KinematicsParams eps(long long e) {
  KinematicsParams p;
  p.epsilon = e;
  return p;
}

}  // namespace

TEST_CASE("subset sum well depths") {
  auto out = compile_subset_sum({{1, 2, 3}, 3}, eps(8));
  // 4 * a * n^2 * eps * t by hand
  REQUIRE(out.geometry.wells.size() == 3);
  CHECK(out.geometry.wells[0].depth == 4 * 1 * 9 * 8 * 3);
  CHECK(out.geometry.wells[1].depth == 1728);
  CHECK(out.geometry.wells[2].depth == 2592);
  CHECK(validate_level(out.level).empty());

  auto single = compile_subset_sum({{5}, 5}, eps(1));
  CHECK(single.geometry.wells[0].depth == 100);
  CHECK(single.geometry.delta == 10);
}

TEST_CASE("subset sum solvability") {
  CHECK(solvable(compile_subset_sum({{}, 0}, eps(1)).level));
  CHECK(solvable(compile_subset_sum({{1, 2, 3}, 3}, eps(8)).level));
  CHECK(solvable(compile_subset_sum({{1, 2, 3}, 6}, eps(1)).level));
  CHECK_FALSE(solvable(compile_subset_sum({{2}, 1}, eps(1)).level));
  CHECK_FALSE(solvable(compile_subset_sum({{2, 4}, 5}, eps(1)).level));
  CHECK_THROWS_AS(compile_subset_sum({{0, 1}, 1}, eps(1)), InvalidInstance);
}

TEST_CASE("3-SAT compiler") {
  CnfFormula xxx{1, {{1, 1, 1}}};
  Level level = compile_3sat_turrets(xxx);
  CHECK(validate_level(level).empty());
  CHECK(level.ids_of<Turret>().size() == 9);
  CHECK(solvable(level));
  CHECK_FALSE(solvable(compile_3sat_turrets({1, {{1}, {-1}}})));
  CHECK(solvable(compile_3sat_turrets({2, {{1, 2}, {-1, 2}, {-2, 1}}})));
  CHECK_FALSE(solvable(compile_3sat_turrets({2, {{1, 2}, {-1, 2}, {-2, 1}, {-1, -2}}})));
}

TEST_CASE("timed Hamiltonian compiler") {
  auto square = grid({{0, 0}, {1, 0}, {0, 1}, {1, 1}});
  auto path = grid({{0, 0}, {1, 0}, {2, 0}});
  CHECK(validate_level(compile_hamcycle_timed(square)).empty());
  CHECK(solvable(compile_hamcycle_timed(square)));
  CHECK_FALSE(solvable(compile_hamcycle_timed(path)));
  CHECK(timed_duration(4, 5, 1, 2) == 26);
  Level l = compile_hamcycle_timed(square, {5, 1, 2});
  for (ElementId id : l.ids_of<TimedButton>()) CHECK(l.get<TimedButton>(id)->duration_ticks == 26);
  CHECK_THROWS_AS(compile_hamcycle_timed(square, {4, 1, 2}), TimingViolation);
}

TEST_CASE("HEP Hamiltonian compiler") {
  auto square = grid({{0, 0}, {1, 0}, {0, 1}, {1, 1}});
  auto path = grid({{0, 0}, {1, 0}, {2, 0}});
  Level l = compile_hamcycle_hep(square, {5, 1, 2, 3});
  CHECK(validate_level(l).empty());
  auto heps = l.ids_of<HepPair>();
  REQUIRE(heps.size() == 1);
  CHECK(l.get<HepPair>(heps[0])->catcher_fire_tick == 29);
  auto v = solve(l);
  REQUIRE(std::holds_alternative<Solvable>(v));
  CHECK(std::get<Solvable>(v).witness_ticks <= 29);
  CHECK(solvable(compile_hamcycle_hep(square)));
  CHECK_FALSE(solvable(compile_hamcycle_hep(path)));
  CHECK_THROWS_AS(compile_hamcycle_hep(square, {5, 1, 2, 1}), TimingViolation);
}

TEST_CASE("NCL compiler") {
  using namespace ncl;
  // single free edge
  auto free_edge = build_and_or_graph({Gate::free_vertex, Gate::free_vertex}, {{0, 1, 1}});
  CHECK(solvable(compile_ncl_switches(free_edge, 0).level));
}

TEST_CASE("switch gadgets bisimulate the abstract switch") {
  for (SwitchKind k : {SwitchKind::cubes, SwitchKind::laser, SwitchKind::gravity}) {
    CAPTURE(switch_kind_name(k));
    auto r = check_switch_bisimulation(k);
    CHECK(r.ok());
    CHECK(r.first_mismatch == "");
    CHECK(r.sequences > 1000);
  }
}
