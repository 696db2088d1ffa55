#pragma once

// Deterministic single-step semantics over a Level.

#include "portal/level.hpp"

#include <compare>
#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace portal {

struct Carried {
  auto operator<=>(const Carried&) const = default;
};
struct Destroyed {
  auto operator<=>(const Destroyed&) const = default;
};
using CubeLocation = std::variant<RoomId, Carried, Destroyed>;

struct GameState {
  RoomId avatar_room = 0;
  Tick clock = 0;
  FlatSet<ElementId> doors_open;
  FlatMap<ElementId, Tick> timers;  // timed button -> remaining ticks (>= 1)
  FlatMap<ElementId, std::uint8_t> switch_states;
  FlatSet<ElementId> turrets_alive;
  FlatMap<ElementId, CubeLocation> cube_locations;
  std::optional<std::pair<ElementId, ElementId>> portal_pair;  // first < second
  FlatSet<ElementId> hep_fired;

  bool operator==(const GameState&) const = default;

  std::optional<ElementId> carried_cube() const;
};

namespace input {
struct Move {
  PassageIndex passage;
  auto operator<=>(const Move&) const = default;
};
struct Press {
  ElementId button;
  auto operator<=>(const Press&) const = default;
};
struct ToggleSwitch {
  ElementId sw;
  auto operator<=>(const ToggleSwitch&) const = default;
};
struct PickUpCube {
  ElementId cube;
  auto operator<=>(const PickUpCube&) const = default;
};
struct DropCube {
  auto operator<=>(const DropCube&) const = default;
};
struct ShootPortalPair {
  ElementId first;
  ElementId second;
  auto operator<=>(const ShootPortalPair&) const = default;
};
struct PortalJump {
  auto operator<=>(const PortalJump&) const = default;
};
struct DisableTurret {
  ElementId turret;
  auto operator<=>(const DisableTurret&) const = default;
};
struct Wait {
  Tick ticks;
  auto operator<=>(const Wait&) const = default;
};
}  // namespace input

// Alternative order is the enumeration order of successors().
using InputEvent = std::variant<input::Move, input::Press, input::ToggleSwitch, input::PickUpCube,
                                input::DropCube, input::ShootPortalPair, input::PortalJump,
                                input::DisableTurret, input::Wait>;

std::string to_string(const InputEvent& event);
// Inverse of to_string; throws std::invalid_argument.
InputEvent parse_input(const std::string& text);

enum class IllegalReason {
  not_adjacent,
  one_way,
  door_closed,
  turret_field,
  wrong_room,
  unknown_element,
  cube_unavailable,
  not_carrying,
  not_visible,
  no_portals,
  already_disabled,
  bad_wait,
};

std::string_view reason_name(IllegalReason r);

struct IllegalInput {
  IllegalReason reason;
  std::string detail;
};

struct StepResult {
  GameState state;  // unchanged input state when `error` is set
  std::optional<IllegalInput> error;

  bool ok() const { return !error.has_value(); }
};

GameState initial_state(const Level& level);

// Precomputed lookup tables for one level. Cheap to share read-only across
// threads; holds a reference to the level, which must outlive it.
class Rules {
 public:
  explicit Rules(const Level& level);

  const Level& level() const { return level_; }
  GameState initial_state() const;
  StepResult step(const GameState& state, const InputEvent& event) const;
  std::vector<std::pair<InputEvent, GameState>> successors(const GameState& state) const;

  // Recomputes doors_open from the rest of the state.
  FlatSet<ElementId> open_doors(const GameState& state) const;

  // Ticks until the next timer expiry or HEP firing, if any is pending.
  std::optional<Tick> next_event_delay(const GameState& state) const;

 private:
  struct DoorControl {
    std::vector<ElementId> timed_openers;
    std::vector<ElementId> weighted_openers;
    std::vector<ElementId> weighted_closers;
    std::vector<std::pair<ElementId, std::uint8_t>> switch_openers;
    std::vector<ElementId> hep_openers;
    std::vector<ElementId> hep_closers;
  };

  void advance(GameState& state, Tick ticks) const;
  bool button_pressed(const GameState& state, const WeightedButton& button) const;

  const Level& level_;
  std::vector<DoorControl> control_;  // indexed by element id (doors only filled)
  std::vector<std::vector<PassageIndex>> incident_;      // by room
  std::vector<std::vector<ElementId>> buttons_in_;       // timed buttons by room
  std::vector<std::vector<ElementId>> switches_in_;      // switches by room
  std::vector<std::vector<ElementId>> turrets_from_;     // turrets by disable room
  std::vector<std::vector<ElementId>> visible_surfaces_;  // surfaces by viewing room
  std::vector<ElementId> cubes_;
  std::vector<ElementId> heps_;
};

StepResult step(const Level& level, const GameState& state, const InputEvent& event);
std::vector<std::pair<InputEvent, GameState>> successors(const Level& level,
                                                         const GameState& state);

// Folds step over the inputs starting from the initial state. Returns the
// final state, or the index of the first illegal input.
struct ReplayResult {
  GameState final_state;
  std::optional<std::size_t> failed_at;
  std::optional<IllegalInput> error;
};
ReplayResult replay(const Level& level, const std::vector<InputEvent>& inputs);

}  // namespace portal
