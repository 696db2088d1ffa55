#include <doctest.h>

#include "portal/solver.hpp"

#include <random>
#include <set>

using namespace portal;

TEST_CASE("solver examples") {
  SUBCASE("start is goal") {
    LevelBuilder b;
    b.room("a");
    auto v = solve(std::move(b).build());
    REQUIRE(std::holds_alternative<Solvable>(v));
    CHECK(std::get<Solvable>(v).witness.empty());
  }
  SUBCASE("door without opener") {
    LevelBuilder b;
    const RoomId a = b.room("a"), c = b.room("c");
    b.guard(b.passage(a, c), b.door());
    b.set_goal(c);
    CHECK(std::holds_alternative<Unsolvable>(solve(std::move(b).build())));
  }
  SUBCASE("press then move") {
    LevelBuilder b;
    const RoomId a = b.room("a"), c = b.room("c");
    const ElementId d = b.door();
    const ElementId button = b.add(TimedButton{a, 3, {d}});
    const PassageIndex p = b.passage(a, c, 2);
    b.guard(p, d);
    b.set_goal(c);
    auto v = solve(std::move(b).build());
    REQUIRE(std::holds_alternative<Solvable>(v));
    const auto& s = std::get<Solvable>(v);
    CHECK(s.witness == std::vector<InputEvent>{input::Press{button}, input::Move{p}});
    CHECK(s.witness_ticks == 3);
  }
  SUBCASE("invalid level is rejected") {
    LevelBuilder b;
    const RoomId a = b.room("a");
    b.add(TimedButton{a, 3, {7}});
    CHECK_THROWS_AS(solve(std::move(b).build()), InvalidLevel);
  }
  SUBCASE("state cap") {
    LevelBuilder b;
    RoomId prev = b.room("r0");
    for (int i = 1; i < 20; ++i) {
      const RoomId r = b.room("r" + std::to_string(i));
      b.passage(prev, r);
      prev = r;
    }
    b.set_goal(prev);
    const Level level = std::move(b).build();
    CHECK(std::holds_alternative<BoundExceeded>(solve(level, {5})));
    CHECK(std::holds_alternative<Solvable>(solve(level, {20})));
  }
}

TEST_CASE("shortest witness prefers fewer ticks among equal length") {
  LevelBuilder b;
  const RoomId a = b.room("a"), c = b.room("c");
  b.passage(a, c, 5);
  const PassageIndex fast = b.passage(a, c, 2);
  b.set_goal(c);
  auto v = solve(std::move(b).build());
  REQUIRE(std::holds_alternative<Solvable>(v));
  CHECK(std::get<Solvable>(v).witness == std::vector<InputEvent>{input::Move{fast}});
}

TEST_CASE("state bound") {
  LevelBuilder one;
  one.room("a");
  CHECK(state_bound(std::move(one).build()) == 1);

  LevelBuilder b;
  const RoomId a = b.room("a"), c = b.room("c");
  const ElementId d = b.door();
  b.guard(b.passage(a, c), d);
  b.add(Switch{a, 0, {FlatSet<ElementId>{}, FlatSet<ElementId>{d}}});
  b.set_goal(c);
  const Level level = std::move(b).build();
  CHECK(state_bound(level) == 8);
  auto v = solve(level);
  REQUIRE(std::holds_alternative<Solvable>(v));
  CHECK(std::get<Solvable>(v).states_explored <= 8);
}

namespace {

// Small random levels over doors, timed buttons and switches.
Level random_level(std::mt19937& rng) {
  auto pick = [&](int n) { return static_cast<int>(rng() % static_cast<unsigned>(n)); };
  LevelBuilder b;
  const int rooms = 2 + pick(3);
  for (int r = 0; r < rooms; ++r) b.room("r" + std::to_string(r));
  std::vector<ElementId> doors;
  for (int i = 0; i < 1 + pick(2); ++i) doors.push_back(b.door(false));
  std::set<ElementId> switched;
  for (int i = 0; i < pick(3); ++i) {
    const RoomId room = static_cast<RoomId>(pick(rooms));
    if (pick(2)) {
      b.add(TimedButton{room, 1 + pick(4), {doors[pick(static_cast<int>(doors.size()))]}});
    } else {
      const ElementId d = doors[pick(static_cast<int>(doors.size()))];
      if (switched.insert(d).second) b.add(Switch{room, 0, {FlatSet<ElementId>{}, FlatSet<ElementId>{d}}});
    }
  }
  for (int i = 0; i < rooms + pick(2); ++i) {
    const RoomId x = static_cast<RoomId>(pick(rooms)), y = static_cast<RoomId>(pick(rooms));
    if (x == y) continue;
    const PassageIndex p = b.passage(x, y, 1 + pick(3));
    if (pick(2)) b.guard(p, doors[pick(static_cast<int>(doors.size()))]);
  }
  b.set_goal(static_cast<RoomId>(rooms - 1));
  Level level = std::move(b).build();
  // a door can't be both switch-driven and timer-driven
  if (!validate_level(level).empty()) return random_level(rng);
  return level;
}

// Independent depth-first reachability on (state minus clock).
bool dfs_reachable(const Level& level) {
  const Rules rules(level);
  std::set<std::vector<std::uint32_t>> seen;
  std::vector<GameState> stack{rules.initial_state()};
  while (!stack.empty()) {
    GameState s = std::move(stack.back());
    stack.pop_back();
    if (s.avatar_room == level.goal) return true;
    if (!seen.insert(canonical_key(s)).second) continue;
    for (auto& [e, next] : rules.successors(s)) stack.push_back(std::move(next));
  }
  return false;
}

}  // namespace

TEST_CASE("solver agrees with depth-first enumeration and witnesses replay") {
  std::mt19937 rng(7);
  int solvable = 0;
  for (int i = 0; i < 300; ++i) {
    const Level level = random_level(rng);
    const Verdict v = solve(level);
    REQUIRE_FALSE(std::holds_alternative<BoundExceeded>(v));
    CHECK(std::holds_alternative<Solvable>(v) == dfs_reachable(level));
    if (auto* s = std::get_if<Solvable>(&v)) {
      ++solvable;
      auto r = replay(level, s->witness);
      CHECK_FALSE(r.failed_at);
      CHECK(r.final_state.avatar_room == level.goal);
      CHECK(r.final_state.clock == s->witness_ticks);
      CHECK(s->states_explored <= state_bound(level));
    } else {
      CHECK(std::get<Unsolvable>(v).states_explored <= state_bound(level));
    }
    // deterministic
    CHECK(verdict_name(solve(level)) == verdict_name(v));
  }
  CHECK(solvable > 50);
}
